#include "arcs/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace arcs {

namespace {

uint64_t point_key(const Point& p) {
    return ((uint64_t)p.c[0].v << 40) | ((uint64_t)p.c[1].v << 20) | p.c[2].v;
}

// 3x3 inverse via the adjugate; fails if singular.
std::array<std::array<Fe, 3>, 3> invert3(const Field& F,
                                         const std::array<std::array<Fe, 3>, 3>& m) {
    auto c2 = [&](int r0, int r1, int c0, int c1) {
        return F.sub(F.mul(m[r0][c0], m[r1][c1]), F.mul(m[r0][c1], m[r1][c0]));
    };
    Fe det = F.add(F.sub(F.mul(m[0][0], c2(1, 2, 1, 2)), F.mul(m[0][1], c2(1, 2, 0, 2))),
                   F.mul(m[0][2], c2(1, 2, 0, 1)));
    if (F.is_zero(det)) fail(errc::bad_params, "singular projectivity");
    Fe dinv = F.inv(det);
    std::array<std::array<Fe, 3>, 3> adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int s0 = (i + 1) % 3, s1 = (i + 2) % 3;
            if (r0 > r1) std::swap(r0, r1);
            if (s0 > s1) std::swap(s0, s1);
            adj[i][j] = F.mul(c2(r0, r1, s0, s1), dinv);
            // Cofactor sign: (-1)^{i+j} after the row/column sort is plain.
            if ((i + j) % 2 == 1) adj[i][j] = F.neg(adj[i][j]);
        }
    return adj;
}

Point apply3(const Field& F, const std::array<std::array<Fe, 3>, 3>& m, const Point& x) {
    std::array<Fe, 3> r;
    for (int i = 0; i < 3; ++i)
        r[i] = F.add(F.mul(m[i][0], x.c[0]),
                     F.add(F.mul(m[i][1], x.c[1]), F.mul(m[i][2], x.c[2])));
    return normalize_point(F, r);
}

// Projectivity sending (a,b,c,d) to the standard frame (e1,e2,e3,(1,1,1)),
// or nothing if the tuple is not in general position.
std::optional<std::array<std::array<Fe, 3>, 3>> frame_map(const Field& F, const Point& a,
                                                          const Point& b, const Point& c,
                                                          const Point& d) {
    Fe det = det3(F, a, b, c);
    if (F.is_zero(det)) return std::nullopt;
    // Solve [a b c] w = d, then M = [w1*a | w2*b | w3*c] sends the frame to
    // (a,b,c,d); the inverse is the map we want.
    std::array<std::array<Fe, 3>, 3> abc{{{a.c[0], b.c[0], c.c[0]},
                                          {a.c[1], b.c[1], c.c[1]},
                                          {a.c[2], b.c[2], c.c[2]}}};
    auto abc_inv = invert3(F, abc);
    std::array<Fe, 3> w;
    for (int i = 0; i < 3; ++i)
        w[i] = F.add(F.mul(abc_inv[i][0], d.c[0]),
                     F.add(F.mul(abc_inv[i][1], d.c[1]), F.mul(abc_inv[i][2], d.c[2])));
    if (F.is_zero(w[0]) || F.is_zero(w[1]) || F.is_zero(w[2])) return std::nullopt;
    std::array<std::array<Fe, 3>, 3> m{{{F.mul(w[0], a.c[0]), F.mul(w[1], b.c[0]), F.mul(w[2], c.c[0])},
                                        {F.mul(w[0], a.c[1]), F.mul(w[1], b.c[1]), F.mul(w[2], c.c[1])},
                                        {F.mul(w[0], a.c[2]), F.mul(w[1], b.c[2]), F.mul(w[2], c.c[2])}}};
    return invert3(F, m);
}

std::vector<uint64_t> image_keys(const Field& F, const std::array<std::array<Fe, 3>, 3>& m,
                                 const std::vector<Point>& pts) {
    std::vector<uint64_t> keys;
    keys.reserve(pts.size());
    for (const Point& p : pts) keys.push_back(point_key(apply3(F, m, p)));
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<Point> min_image(const Field& F, const std::vector<Point>& pts) {
    std::vector<uint64_t> best;
    std::array<std::array<Fe, 3>, 3> best_map{};
    std::size_t n = pts.size();
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ib = 0; ib < n; ++ib)
            for (std::size_t ic = 0; ic < n; ++ic)
                for (std::size_t id = 0; id < n; ++id) {
                    if (ia == ib || ia == ic || ia == id || ib == ic || ib == id || ic == id)
                        continue;
                    auto m = frame_map(F, pts[ia], pts[ib], pts[ic], pts[id]);
                    if (!m) continue;
                    auto keys = image_keys(F, *m, pts);
                    if (best.empty() || keys < best) {
                        best = std::move(keys);
                        best_map = *m;
                    }
                }
    if (best.empty()) fail(errc::bad_params, "no 4-subset in general position");
    std::vector<Point> out;
    out.reserve(n);
    for (const Point& p : pts) out.push_back(apply3(F, best_map, p));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Point> extensions(const Arc& A) {
    const Field& F = A.field();
    auto all = all_points(F);
    std::vector<bool> bad(all.size(), false);
    auto mark_in_arc = [&]() {
        for (const Point& a : A.points()) {
            auto it = std::lower_bound(all.begin(), all.end(), a);
            bad[(std::size_t)(it - all.begin())] = true;
        }
    };
    mark_in_arc();
    const auto& pts = A.sorted_points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            LinearForm l = line_through(F, pts[i], pts[j]);
            for (std::size_t k = 0; k < all.size(); ++k)
                if (!bad[k] && incident(F, l, all[k])) bad[k] = true;
        }
    std::vector<Point> out;
    for (std::size_t k = 0; k < all.size(); ++k)
        if (!bad[k]) out.push_back(all[k]);
    return out;
}

bool is_complete(const Arc& A) { return extensions(A).empty(); }

std::vector<Point> canonical_form(const Arc& A) {
    if (A.size() < 4) fail(errc::too_few_points, "canonical form needs at least 4 points");
    return min_image(A.field(), A.sorted_points());
}

ClassificationResult classify(const Field& F, std::size_t size, bool complete_only,
                              bool allow_large) {
    if (size < 4) fail(errc::bad_params, "classification is implemented for size >= 4");
    if (F.q() > 13 && !allow_large)
        fail(errc::budget_exceeded,
             "exhaustive classification is budgeted for q <= 13 (pass the long-run flag)");

    // Every 4-arc is equivalent to the standard frame.
    std::vector<Point> frame{Point{{F.one(), F.zero(), F.zero()}},
                             Point{{F.zero(), F.one(), F.zero()}},
                             Point{{F.zero(), F.zero(), F.one()}},
                             Point{{F.one(), F.one(), F.one()}}};
    std::sort(frame.begin(), frame.end());

    std::vector<std::vector<Point>> level{frame};
    for (std::size_t k = 4; k < size; ++k) {
        std::set<std::vector<uint64_t>> seen;
        std::vector<std::vector<Point>> next;
        for (const auto& rep : level) {
            Arc A = make_arc(F, rep);
            for (const Point& x : extensions(A)) {
                std::vector<Point> child = rep;
                child.push_back(x);
                std::sort(child.begin(), child.end());
                auto canon = min_image(F, child);
                std::vector<uint64_t> key;
                key.reserve(canon.size());
                for (const Point& p : canon) key.push_back(point_key(p));
                if (seen.insert(std::move(key)).second) next.push_back(std::move(canon));
            }
        }
        level = std::move(next);
        if (level.empty()) break;
    }

    ClassificationResult res;
    res.q = F.q();
    res.size = size;
    res.complete_only = complete_only;
    for (auto& rep : level) {
        if (rep.size() != size) continue;
        if (complete_only && !is_complete(make_arc(F, rep))) continue;
        res.representatives.push_back(std::move(rep));
    }
    std::sort(res.representatives.begin(), res.representatives.end());
    res.count = res.representatives.size();
    return res;
}

KestenbandArc kestenband(const Field& F, std::optional<KestenbandSpec> spec) {
    uint32_t q = F.q();
    uint32_t sq = (uint32_t)std::round(std::sqrt((double)q));
    if (q % 2 == 0 || sq * sq != q)
        fail(errc::not_odd_square, "kestenband requires q an odd square");

    HomPoly h1(F, (int)sq + 1);
    h1.set_coeff({(int)sq + 1, 0, 0}, F.one());
    h1.set_coeff({0, (int)sq + 1, 0}, F.one());
    h1.set_coeff({0, 0, (int)sq + 1}, F.one());

    auto frob = [&](Fe a) { return F.pow(a, sq); };

    auto char_poly_irreducible = [&](const std::array<std::array<Fe, 3>, 3>& H) {
        // X^3 - tr X^2 + sigma2 X - det; irreducible over F_q iff no root.
        Fe tr = F.add(H[0][0], F.add(H[1][1], H[2][2]));
        auto m2 = [&](int i0, int i1, int j0, int j1) {
            return F.sub(F.mul(H[i0][j0], H[i1][j1]), F.mul(H[i0][j1], H[i1][j0]));
        };
        Fe s2 = F.add(m2(0, 1, 0, 1), F.add(m2(0, 2, 0, 2), m2(1, 2, 1, 2)));
        Fe det = F.add(F.sub(F.mul(H[0][0], m2(1, 2, 1, 2)), F.mul(H[0][1], m2(1, 2, 0, 2))),
                       F.mul(H[0][2], m2(1, 2, 0, 1)));
        for (uint32_t x = 0; x < q; ++x) {
            Fe xv{x};
            Fe v = F.sub(F.mul(xv, F.mul(xv, xv)), F.mul(tr, F.mul(xv, xv)));
            v = F.add(v, F.mul(s2, xv));
            v = F.sub(v, det);
            if (F.is_zero(v)) return false;
        }
        return true;
    };

    auto try_H = [&](const std::array<std::array<Fe, 3>, 3>& H)
        -> std::optional<KestenbandArc> {
        if (!char_poly_irreducible(H)) return std::nullopt;
        HomPoly h2(F, (int)sq + 1);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (F.is_zero(H[i][j])) continue;
                Mono m{0, 0, 0};
                m[i] += (int)sq;
                m[j] += 1;
                h2.set_coeff(m, F.add(h2.coeff(m), H[i][j]));
            }
        if (h2.is_zero()) return std::nullopt;
        std::vector<Point> zeros;
        for (const Point& x : all_points(F))
            if (F.is_zero(h1.eval(x)) && F.is_zero(h2.eval(x))) zeros.push_back(x);
        if (zeros.size() != q - sq + 1) return std::nullopt;
        auto v = Arc::validate(F, zeros);
        if (!std::holds_alternative<Arc>(v)) return std::nullopt;
        return KestenbandArc{std::get<Arc>(std::move(v)), KestenbandSpec{H}, h1, h2};
    };

    if (spec) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (spec->H[i][j] != frob(spec->H[j][i]))
                    fail(errc::bad_params, "H is not Hermitian");
        if (auto r = try_H(spec->H)) return std::move(*r);
        fail(errc::no_valid_h, "supplied H does not produce a Kestenband arc");
    }

    // Diagonal entries lie in the subfield fixed by the sqrt(q) Frobenius.
    std::vector<Fe> sub;
    for (uint32_t v = 0; v < q; ++v)
        if (frob(Fe{v}) == Fe{v}) sub.push_back(Fe{v});

    for (Fe h11 : sub)
        for (Fe h22 : sub)
            for (Fe h33 : sub)
                for (uint32_t a = 0; a < q; ++a)
                    for (uint32_t b = 0; b < q; ++b)
                        for (uint32_t c = 0; c < q; ++c) {
                            Fe h12{a}, h13{b}, h23{c};
                            std::array<std::array<Fe, 3>, 3> H{
                                {{h11, h12, h13},
                                 {frob(h12), h22, h23},
                                 {frob(h13), frob(h23), h33}}};
                            if (auto r = try_H(H)) return std::move(*r);
                        }
    fail(errc::no_valid_h, "exhausted H search without a valid arc");
}

} // namespace arcs
