#include "arcs/ttform.hpp"

#include <algorithm>
#include <sstream>

namespace arcs {

uint32_t char_power_below(uint32_t p, uint32_t t) {
    uint32_t pe = 1;
    while (pe * p <= t) pe *= p;
    return pe;
}

std::vector<Point> tangent_point_set(const Arc& A, const Point& y) {
    const Field& F = A.field();
    std::vector<Point> pts;
    for (const LinearForm& l : tangent_lines(A, y))
        for (const Point& x : points_on_line(F, l))
            if (x != y && std::find(pts.begin(), pts.end(), x) == pts.end())
                pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    return pts;
}

SSelection select_S(const Arc& A) {
    const Field& F = A.field();
    int t = (int)A.t();
    SSelection sel;
    uint32_t pe = char_power_below(F.p(), A.t());
    auto chain = socle_chain(A, (int)pe);
    sel.S0 = chain.front();
    std::size_t quota = std::min<std::size_t>((std::size_t)(t + 2) * (t + 1) / 2,
                                              A.size() - sel.S0.size());
    std::vector<Point> extras;
    auto push_extra = [&](const Point& x) {
        if (extras.size() >= quota) return;
        if (std::find(sel.S0.begin(), sel.S0.end(), x) != sel.S0.end()) return;
        if (std::find(extras.begin(), extras.end(), x) != extras.end()) return;
        extras.push_back(x);
    };
    for (const Point& x : chain.back()) push_extra(x);
    for (const Point& x : A.sorted_points()) push_extra(x);
    sel.S = sel.S0;
    sel.S.insert(sel.S.end(), extras.begin(), extras.end());
    return sel;
}

namespace {

std::vector<Fe> monomial_values(const Field& F, const std::vector<Mono>& monos,
                                const Point& x) {
    std::vector<Fe> v(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
        Fe acc = F.one();
        for (int k = 0; k < 3; ++k)
            if (monos[i][k]) acc = F.mul(acc, F.pow(x.c[k], monos[i][k]));
        v[i] = acc;
    }
    return v;
}

} // namespace

BiPoly build_F(const Arc& A, const TangentSystem& sys) {
    const Field& F = A.field();
    int t = (int)A.t();
    if (t < 1) fail(errc::deficiency_zero, "build_F needs t >= 1");
    auto monos = monomials_of_degree(t);
    std::size_t N = monos.size();

    SSelection sel = select_S(A);
    const Point& e = sys.base();
    if (std::find(sel.S0.begin(), sel.S0.end(), e) == sel.S0.end())
        fail(errc::bad_params, "tangent system base point must lie in the t-socle S0");

    std::vector<std::vector<Fe>> rows;
    auto vanish_row = [&](const Point& z, const Point& y) {
        auto vz = monomial_values(F, monos, z);
        auto vy = monomial_values(F, monos, y);
        std::vector<Fe> row(N * N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) row[i * N + j] = F.mul(vz[i], vy[j]);
        return row;
    };

    // (3): F(z,e) = 0 on a t-socle of Tan(e).
    auto Te = socle(F, tangent_point_set(A, e), t);
    for (const Point& z : Te) rows.push_back(vanish_row(z, e));

    // (4): for y in S0 \ {e}, F(z,y) = 0 on a t-socle of Tan(y), plus the
    // symmetry condition F(y,e) - (-1)^{t+1} F(e,y) = 0.
    Fe sign = F.sign_pow(A.t() + 1);
    for (const Point& y : sel.S0) {
        if (y == e) continue;
        for (const Point& z : socle(F, tangent_point_set(A, y), t))
            rows.push_back(vanish_row(z, y));
        auto vy = monomial_values(F, monos, y);
        auto ve = monomial_values(F, monos, e);
        std::vector<Fe> row(N * N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                row[i * N + j] = F.sub(F.mul(vy[i], ve[j]), F.mul(sign, F.mul(ve[i], vy[j])));
        rows.push_back(std::move(row));
    }

    // (5): for y in S \ S0, F(z,y) = 0 on a T(y) subset of Tan(y) with
    // S0 union T(y) a t-socle of the whole plane.
    for (std::size_t k = sel.S0.size(); k < sel.S.size(); ++k) {
        const Point& y = sel.S[k];
        IncrementalRank rk(F);
        for (const Point& s : sel.S0) {
            bool ok = rk.try_add(monomial_values(F, monos, s));
            if (!ok) fail(errc::no_solution, "S0 columns unexpectedly dependent");
        }
        for (const Point& z : tangent_point_set(A, y)) {
            if (rk.rank() == N) break;
            if (rk.try_add(monomial_values(F, monos, z)))
                rows.push_back(vanish_row(z, y));
        }
        if (rk.rank() != N)
            fail(errc::no_solution, "could not complete S0 to a plane t-socle inside Tan(y)");
    }

    // The condition count stays below the coefficient count: at most
    // C(t+2,2)^2 - 1 conditions.
    if (rows.size() > N * N - 1)
        fail(errc::no_solution, "condition count exceeds the guaranteed bound");

    Mat M(F, rows.size(), N * N);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < N * N; ++c) M.at(r, c) = rows[r][c];
    auto null_basis = M.nullspace();
    if (null_basis.empty()) fail(errc::no_solution, "condition system has no nonzero solution");

    const HomPoly& fe = sys.form_at(e);
    for (const auto& vec : null_basis) {
        BiPoly cand(F, t, t);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                cand.set_coeff({monos[i], monos[j]}, vec[i * N + j]);
        HomPoly fxe = cand.eval_y(e);
        if (fxe.is_zero()) continue;
        // F(X,e) is forced to be a multiple of f_e; recover the scalar.
        Mono lead = fxe.terms().begin()->first;
        Fe lambda = F.div(fe.coeff(lead), fxe.coeff(lead));
        if (F.is_zero(lambda) || !(fxe.scaled(lambda) == fe))
            fail(errc::no_solution, "solution does not restrict to a multiple of f_e");
        return cand.scaled(lambda);
    }
    fail(errc::scaling_degenerate, "every nullspace element has F(X,e) = 0");
}

FReport verify_F(const Arc& A, const TangentSystem& sys, const BiPoly& Fform) {
    const Field& F = A.field();
    int t = (int)A.t();
    SSelection sel = select_S(A);
    auto phi_t = vanishing_space(F, A.points(), t);
    auto describe = [&](const char* what, const Point& y) {
        std::ostringstream os;
        os << what << " at point (" << F.to_string(y.c[0]) << "," << F.to_string(y.c[1])
           << "," << F.to_string(y.c[2]) << ")";
        return os.str();
    };
    for (const Point& y : sel.S) {
        if (!(Fform.eval_y(y) == sys.form_at(y)))
            return {false, describe("F(X,y) != f_y(X)", y)};
    }
    for (const Point& y : A.sorted_points()) {
        HomPoly diff = Fform.eval_y(y).sub(sys.form_at(y));
        if (!phi_t.contains(diff))
            return {false, describe("F(X,y) - f_y(X) not in the degree-t vanishing space", y)};
    }
    Fe sign = F.sign_pow((uint64_t)t + 1);
    for (const Point& x : A.sorted_points())
        for (const Point& y : A.sorted_points()) {
            if (Fform.eval(x, y) != F.mul(sign, Fform.eval(y, x)))
                return {false, describe("symmetry F(x,y) = (-1)^{t+1} F(y,x) fails", x)};
        }
    return {};
}

} // namespace arcs
