#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "arcs/gf.hpp"

namespace arcs {

/// Point of PG(2,q), normalized so the first nonzero coordinate is 1.
struct Point {
    std::array<Fe, 3> c{};

    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Line of PG(2,q) as a linear form, normalized so the first nonzero
/// coefficient is 1. The kernel is the line.
struct LinearForm {
    std::array<Fe, 3> c{};

    friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

Point normalize_point(const Field& F, std::array<Fe, 3> raw);
LinearForm normalize_form(const Field& F, std::array<Fe, 3> raw);

inline Fe eval_form(const Field& F, const LinearForm& l, const Point& x) {
    return F.add(F.mul(l.c[0], x.c[0]), F.add(F.mul(l.c[1], x.c[1]), F.mul(l.c[2], x.c[2])));
}

inline bool incident(const Field& F, const LinearForm& l, const Point& x) {
    return F.is_zero(eval_form(F, l, x));
}

/// det(a, b, c) of three coordinate columns.
Fe det3(const Field& F, const Point& a, const Point& b, const Point& c);

/// The unique line through two distinct points (cross product, normalized).
LinearForm line_through(const Field& F, const Point& a, const Point& b);

/// All q+1 points incident with a line, in canonical order.
std::vector<Point> points_on_line(const Field& F, const LinearForm& l);

/// All q^2+q+1 points of PG(2,q), in canonical order.
std::vector<Point> all_points(const Field& F);

struct DuplicateWitness {
    std::size_t i, j;
};
struct CollinearWitness {
    std::size_t i, j, k;
};
using ArcViolation = std::variant<DuplicateWitness, CollinearWitness>;

/// An arc of PG(2,q): pairwise-distinct points, no three collinear.
/// Points retain their given order; canonical order is by encoding.
class Arc {
  public:
    static std::variant<Arc, ArcViolation> validate(const Field& F, std::vector<Point> pts);

    const Field& field() const { return *field_; }
    const std::vector<Point>& points() const { return points_; }
    /// Points in canonical (encoding-lex) order.
    const std::vector<Point>& sorted_points() const { return sorted_; }
    std::size_t size() const { return points_.size(); }
    /// Deficiency t = q + 2 - |A|.
    uint32_t t() const { return field_->q() + 2 - (uint32_t)points_.size(); }

    bool contains(const Point& x) const;

  private:
    Arc(const Field& F, std::vector<Point> pts);
    const Field* field_;
    std::vector<Point> points_;
    std::vector<Point> sorted_;
};

/// Convenience wrapper that throws on violation.
Arc make_arc(const Field& F, std::vector<Point> pts);

/// The t tangent lines at an arc point: lines through a meeting the arc only
/// at a, sorted canonically.
std::vector<LinearForm> tangent_lines(const Arc& A, const Point& a);

/// The conic {(1,s,s^2)} U {(0,0,1)}, i.e. X2^2 = X1 X3, as an arc of size
/// q+1.
Arc conic_arc(const Field& F);

} // namespace arcs
