#include "arcs/socle.hpp"

#include <algorithm>

namespace arcs {

Mat eval_matrix(const Field& F, const std::vector<Point>& D, int r) {
    auto monos = monomials_of_degree(r);
    Mat m(F, monos.size(), D.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
        const Mono& mo = monos[i];
        for (std::size_t j = 0; j < D.size(); ++j) {
            Fe v = F.one();
            for (int k = 0; k < 3; ++k)
                if (mo[k]) v = F.mul(v, F.pow(D[j].c[k], mo[k]));
            m.at(i, j) = v;
        }
    }
    return m;
}

std::vector<std::vector<Fe>> VanishingSpace::coeff_rows(const Field& F) const {
    auto monos = monomials_of_degree(degree);
    std::vector<std::vector<Fe>> rows;
    for (const auto& b : basis) {
        std::vector<Fe> v(monos.size(), Fe{0});
        for (std::size_t i = 0; i < monos.size(); ++i) v[i] = b.coeff(monos[i]);
        rows.push_back(std::move(v));
    }
    return rows;
}

bool VanishingSpace::contains(const HomPoly& p) const {
    if (p.is_zero()) return true;
    if (basis.empty() || p.degree() != degree) return false;
    const Field& F = basis.front().field();
    auto monos = monomials_of_degree(degree);
    std::vector<Fe> v(monos.size(), Fe{0});
    for (std::size_t i = 0; i < monos.size(); ++i) v[i] = p.coeff(monos[i]);
    v = reduce_against(F, std::move(v), coeff_rows(F));
    return std::all_of(v.begin(), v.end(), [&](Fe x) { return F.is_zero(x); });
}

VanishingSpace vanishing_space(const Field& F, const std::vector<Point>& D, int r) {
    auto monos = monomials_of_degree(r);
    // Conditions: one row per point, one column per monomial coefficient.
    Mat m(F, D.size(), monos.size());
    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j) {
            Fe v = F.one();
            for (int k = 0; k < 3; ++k)
                if (monos[j][k]) v = F.mul(v, F.pow(D[i].c[k], monos[j][k]));
            m.at(i, j) = v;
        }
    VanishingSpace out;
    out.degree = r;
    for (const auto& row : m.nullspace()) {
        HomPoly p(F, r);
        for (std::size_t j = 0; j < monos.size(); ++j) p.set_coeff(monos[j], row[j]);
        out.basis.push_back(std::move(p));
    }
    return out;
}

std::vector<Point> socle(const Field& F, const std::vector<Point>& D, int r,
                         const std::vector<Point>& seed) {
    auto monos = monomials_of_degree(r);
    auto column = [&](const Point& x) {
        std::vector<Fe> col(monos.size());
        for (std::size_t i = 0; i < monos.size(); ++i) {
            Fe v = F.one();
            for (int k = 0; k < 3; ++k)
                if (monos[i][k]) v = F.mul(v, F.pow(x.c[k], monos[i][k]));
            col[i] = v;
        }
        return col;
    };
    IncrementalRank rk(F);
    std::vector<Point> chosen;
    for (const Point& s : seed) {
        if (!rk.try_add(column(s)))
            fail(errc::seed_dependent, "seed columns are linearly dependent at degree " +
                                           std::to_string(r));
        chosen.push_back(s);
    }
    std::vector<Point> rest = D;
    std::sort(rest.begin(), rest.end());
    for (const Point& x : rest) {
        if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
        if (rk.try_add(column(x))) chosen.push_back(x);
    }
    return chosen;
}

std::vector<std::vector<Point>> socle_chain(const Arc& A, int r_max) {
    const Field& F = A.field();
    int t = (int)A.t();
    std::vector<std::vector<Point>> chain;
    std::vector<Point> prev;
    for (int j = 0; j <= r_max; ++j) {
        prev = socle(F, A.points(), t + j, prev);
        chain.push_back(prev);
    }
    return chain;
}

} // namespace arcs
