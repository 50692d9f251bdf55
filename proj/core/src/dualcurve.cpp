#include "arcs/dualcurve.hpp"

namespace arcs {

namespace {

// Z as quadratic bihomogeneous forms, following the substitution
// det(X,Y,u) = u1 Z1 + u2 Z2 + u3 Z3.
std::array<BiPoly, 3> dual_substitution(const Field& F) {
    std::array<BiPoly, 3> z{BiPoly(F, 1, 1), BiPoly(F, 1, 1), BiPoly(F, 1, 1)};
    auto term = [&](BiPoly& p, int xi, int yi, bool pos) {
        Mono mx{0, 0, 0}, my{0, 0, 0};
        mx[xi] = 1;
        my[yi] = 1;
        p.set_coeff({mx, my}, pos ? F.one() : F.neg(F.one()));
    };
    term(z[0], 1, 2, true);  // X2 Y3
    term(z[0], 2, 1, false); // -X3 Y2
    term(z[1], 2, 0, true);  // X3 Y1
    term(z[1], 0, 2, false); // -X1 Y3
    term(z[2], 0, 1, true);  // X1 Y2
    term(z[2], 1, 0, false); // -X2 Y1
    return z;
}

} // namespace

DualCurve build_dual_curve(const TangentSystem& S) {
    const Arc& A = S.arc();
    const Field& F = A.field();
    int t = (int)A.t();
    int m = (F.q() % 2 == 1) ? 2 : 1;
    std::size_t need = (std::size_t)m * t + 2;
    if (A.size() < need)
        fail(errc::arc_too_small, "interpolation set needs mt+2 = " + std::to_string(need) +
                                      " points, arc has " + std::to_string(A.size()));
    std::vector<Point> E(A.sorted_points().begin(), A.sorted_points().begin() + need);

    HomPoly phi(F, m * t);
    for (std::size_t ia = 0; ia < E.size(); ++ia) {
        for (std::size_t ib = ia + 1; ib < E.size(); ++ib) {
            Fe num = F.pow(S.form_at(E[ia]).eval(E[ib]), m);
            HomPoly prod = HomPoly::monomial(F, {0, 0, 0}, F.one());
            Fe den = F.one();
            for (std::size_t iu = 0; iu < E.size(); ++iu) {
                if (iu == ia || iu == ib) continue;
                const Point& u = E[iu];
                HomPoly lin(F, 1);
                lin.set_coeff({1, 0, 0}, u.c[0]);
                lin.set_coeff({0, 1, 0}, u.c[1]);
                lin.set_coeff({0, 0, 1}, u.c[2]);
                prod = prod.mul(lin);
                den = F.mul(den, det3(F, E[ia], E[ib], u)); // nonzero: E is an arc
            }
            phi = phi.add(prod.scaled(F.div(num, den)));
        }
    }

    auto z = dual_substitution(F);
    BiPoly G(F, m * t, m * t);
    for (const auto& [mono, c] : phi.terms()) {
        BiPoly term = BiPoly::from_x_poly(HomPoly::monomial(F, {0, 0, 0}, c));
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < mono[i]; ++k) term = term.mul(z[i]);
        G = G.add(term);
    }
    return DualCurve{m, std::move(phi), std::move(G)};
}

DualReport verify_dual(const TangentSystem& S, const DualCurve& D) {
    const Arc& A = S.arc();
    const Field& F = A.field();
    for (const Point& a : A.sorted_points()) {
        HomPoly lhs = D.G.eval_y(a);
        HomPoly rhs = S.form_at(a).pow(D.m);
        if (!(lhs == rhs)) return DualReport{false, a, std::nullopt};
    }
    for (const Point& a : A.sorted_points()) {
        for (const LinearForm& l : S.factors_at(a)) {
            Fe v = D.phi.eval(std::array<Fe, 3>{l.c[0], l.c[1], l.c[2]});
            if (!F.is_zero(v)) return DualReport{false, std::nullopt, l};
        }
    }
    return DualReport{};
}

} // namespace arcs
