#include "arcs/tangents.hpp"

namespace arcs {

const HomPoly& TangentSystem::form_at(const Point& a) const {
    auto it = forms_.find(a);
    if (it == forms_.end()) fail(errc::point_not_in_arc, "no tangent form at this point");
    return it->second;
}

const std::vector<LinearForm>& TangentSystem::factors_at(const Point& a) const {
    auto it = factors_.find(a);
    if (it == factors_.end()) fail(errc::point_not_in_arc, "no tangent factors at this point");
    return it->second;
}

TangentSystem build_tangent_system(const Arc& A, std::optional<Point> e_opt) {
    const Field& F = A.field();
    if (A.t() == 0) fail(errc::deficiency_zero, "arc has deficiency t = 0");
    Point e = e_opt.value_or(A.sorted_points().front());
    if (!A.contains(e)) fail(errc::point_not_in_arc, "base point not in arc");

    TangentSystem S;
    S.arc_ = &A;
    S.e_ = e;

    auto raw_form = [&](const Point& a) {
        auto tl = tangent_lines(A, a);
        HomPoly f = HomPoly::from_form(F, tl[0]);
        for (std::size_t i = 1; i < tl.size(); ++i)
            f = f.mul(HomPoly::from_form(F, tl[i]));
        S.factors_[a] = std::move(tl);
        return f;
    };

    HomPoly fe = raw_form(e).normalized();
    S.forms_.emplace(e, fe);
    Fe sign = F.sign_pow(A.t() + 1);
    for (const Point& a : A.sorted_points()) {
        if (a == e) continue;
        HomPoly fa = raw_form(a);
        // Scale so f_a(e) = (-1)^{t+1} f_e(a); f_a(e) != 0 since no tangent
        // at a passes through e.
        Fe target = F.mul(sign, fe.eval(a));
        S.forms_.emplace(a, fa.scaled(F.div(target, fa.eval(e))));
    }
    return S;
}

LemmaReport check_lemma_of_tangents(const TangentSystem& S) {
    const Arc& A = S.arc();
    const Field& F = A.field();
    Fe sign = F.sign_pow(A.t() + 1);
    for (const Point& x : A.sorted_points())
        for (const Point& y : A.sorted_points()) {
            if (x == y) continue;
            Fe lhs = S.form_at(x).eval(y);
            Fe rhs = F.mul(sign, S.form_at(y).eval(x));
            if (lhs != rhs) return LemmaReport{false, x, y};
        }
    return LemmaReport{};
}

} // namespace arcs
