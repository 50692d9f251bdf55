#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "arcs/plane.hpp"

namespace arcs {

/// Exponent triple of a trivariate monomial X1^a X2^b X3^c.
using Mono = std::array<int, 3>;

/// Graded-lex order with X1 > X2 > X3 (total degree first, then the exponent
/// of the more significant variable decides).
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da < db;
        return a < b;
    }
};

/// All monomials of total degree r, in ascending graded-lex order.
std::vector<Mono> monomials_of_degree(int r);

/// Homogeneous trivariate polynomial over a fixed field. Zero coefficients
/// are never stored; exponent triples all sum to the degree.
class HomPoly {
  public:
    HomPoly() = default;
    HomPoly(const Field& F, int degree) : field_(&F), degree_(degree) {}

    static HomPoly from_form(const Field& F, const LinearForm& l);
    static HomPoly monomial(const Field& F, Mono m, Fe c);

    const Field& field() const { return *field_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mono, Fe, MonoLess>& terms() const { return terms_; }

    Fe coeff(const Mono& m) const;
    void set_coeff(const Mono& m, Fe c);

    HomPoly add(const HomPoly& o) const;
    HomPoly sub(const HomPoly& o) const;
    HomPoly scaled(Fe s) const;
    HomPoly mul(const HomPoly& o) const;
    HomPoly pow(int n) const;

    Fe eval(const Point& x) const;
    Fe eval(const std::array<Fe, 3>& x) const;

    /// Scale so the graded-lex smallest monomial with nonzero coefficient
    /// has coefficient 1. Zero polynomial stays zero.
    HomPoly normalized() const;

    /// Restriction to the parametrized line s*x + u*y: a binary form of the
    /// same degree, returned as coefficients of s^k u^(deg-k), k = 0..deg.
    std::vector<Fe> restrict_to_line(const Point& x, const Point& y) const;

    /// Max exponent of variable i over all terms.
    int degree_in(int i) const;

    bool operator==(const HomPoly& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    std::string to_string() const;

  private:
    const Field* field_ = nullptr;
    int degree_ = 0;
    std::map<Mono, Fe, MonoLess> terms_;
};

/// C(n,k) reduced into the field (exact integer binomial, then mod p).
Fe binom_fe(const Field& F, int n, int k);

} // namespace arcs
