#pragma once

#include "arcs/hompoly.hpp"

namespace arcs {

/// Pair of exponent triples (X-monomial, Y-monomial).
using BiMono = std::pair<Mono, Mono>;

struct BiMonoLess {
    bool operator()(const BiMono& a, const BiMono& b) const {
        MonoLess less;
        if (less(a.first, b.first)) return true;
        if (less(b.first, a.first)) return false;
        return less(a.second, b.second);
    }
};

/// Bihomogeneous polynomial in X = (X1,X2,X3) and Y = (Y1,Y2,Y3), of degree
/// deg_x in X and deg_y in Y. A (t,t)-form is the deg_x = deg_y = t case.
class BiPoly {
  public:
    BiPoly() = default;
    BiPoly(const Field& F, int deg_x, int deg_y)
        : field_(&F), deg_x_(deg_x), deg_y_(deg_y) {}

    static BiPoly from_x_poly(const HomPoly& p);
    static BiPoly from_y_poly(const HomPoly& p);

    const Field& field() const { return *field_; }
    int deg_x() const { return deg_x_; }
    int deg_y() const { return deg_y_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BiMono, Fe, BiMonoLess>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Fe coeff(const BiMono& m) const;
    void set_coeff(const BiMono& m, Fe c);

    BiPoly add(const BiPoly& o) const;
    BiPoly sub(const BiPoly& o) const;
    BiPoly scaled(Fe s) const;
    BiPoly mul(const BiPoly& o) const;

    /// Substitute Y = a: a homogeneous polynomial of degree deg_x in X.
    HomPoly eval_y(const Point& a) const;
    /// Substitute X = a: a homogeneous polynomial of degree deg_y in Y.
    HomPoly eval_x(const Point& a) const;
    Fe eval(const Point& x, const Point& y) const;

    /// Swap the roles of X and Y.
    BiPoly swapped() const;

    /// Expansion of P(X+Y, Y) as a polynomial in X with HomPoly-in-Y
    /// coefficients: for each X-monomial of degree 0..deg_x, the coefficient
    /// is homogeneous in Y of degree deg_x + deg_y - |monomial|.
    std::map<Mono, HomPoly, MonoLess> shift_x_by_y() const;

  private:
    const Field* field_ = nullptr;
    int deg_x_ = 0, deg_y_ = 0;
    std::map<BiMono, Fe, BiMonoLess> terms_;
};

} // namespace arcs
