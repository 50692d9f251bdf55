#pragma once

#include <map>
#include <optional>

#include "arcs/hompoly.hpp"

namespace arcs {

/// The scaled family {f_a}: for each arc point a, the degree-t product of
/// the tangent forms at a, scaled so that f_a(e) = (-1)^{t+1} f_e(a) for the
/// base point e. f_e itself is normalized so its graded-lex smallest nonzero
/// coefficient is 1.
class TangentSystem {
  public:
    const Arc& arc() const { return *arc_; }
    const Point& base() const { return e_; }
    const HomPoly& form_at(const Point& a) const;
    const std::vector<LinearForm>& factors_at(const Point& a) const;

    friend TangentSystem build_tangent_system(const Arc& A, std::optional<Point> e);

  private:
    const Arc* arc_ = nullptr;
    Point e_;
    std::map<Point, HomPoly> forms_;
    std::map<Point, std::vector<LinearForm>> factors_;
};

TangentSystem build_tangent_system(const Arc& A, std::optional<Point> e = std::nullopt);

struct LemmaReport {
    bool pass = true;
    // First violating ordered pair in canonical order, when pass is false.
    Point x, y;
};

/// Checks f_x(y) = (-1)^{t+1} f_y(x) over every ordered pair of distinct arc
/// points.
LemmaReport check_lemma_of_tangents(const TangentSystem& S);

} // namespace arcs
