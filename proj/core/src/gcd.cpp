#include "arcs/gcd.hpp"

#include <algorithm>

namespace arcs {

Uni uni_trim(const Field& F, Uni f) {
    while (!f.empty() && F.is_zero(f.back())) f.pop_back();
    return f;
}

int uni_deg(const Uni& f) { return (int)f.size() - 1; }

Uni uni_mul(const Field& F, const Uni& a, const Uni& b) {
    if (a.empty() || b.empty()) return {};
    Uni r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return uni_trim(F, std::move(r));
}

Uni uni_sub(const Field& F, const Uni& a, const Uni& b) {
    Uni r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    return uni_trim(F, std::move(r));
}

std::pair<Uni, Uni> uni_divmod(const Field& F, Uni a, const Uni& b) {
    if (b.empty()) fail(errc::division_by_zero, "univariate division by zero");
    if (a.size() < b.size()) return {{}, uni_trim(F, std::move(a))};
    Uni q(a.size() - b.size() + 1, F.zero());
    Fe lead_inv = F.inv(b.back());
    for (int i = (int)a.size() - (int)b.size(); i >= 0; --i) {
        Fe c = F.mul(a[i + b.size() - 1], lead_inv);
        q[i] = c;
        if (F.is_zero(c)) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i + j] = F.sub(a[i + j], F.mul(c, b[j]));
    }
    return {uni_trim(F, std::move(q)), uni_trim(F, std::move(a))};
}

Uni uni_gcd(const Field& F, Uni a, Uni b) {
    a = uni_trim(F, std::move(a));
    b = uni_trim(F, std::move(b));
    while (!b.empty()) {
        auto [q, r] = uni_divmod(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Fe inv = F.inv(a.back());
        for (auto& c : a) c = F.mul(c, inv);
    }
    return a;
}

namespace {

// Bivariate polynomial in (X1, X2): coefficient of X1^i is biv[i], a
// univariate polynomial in X2.
using Biv = std::vector<Uni>;

Biv biv_trim(Biv f) {
    while (!f.empty() && f.back().empty()) f.pop_back();
    return f;
}

int biv_deg1(const Biv& f) { return (int)f.size() - 1; }

bool biv_is_zero(const Biv& f) { return f.empty(); }

Biv biv_scale(const Field& F, const Biv& f, const Uni& s) {
    Biv r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = uni_mul(F, f[i], s);
    return biv_trim(std::move(r));
}

Biv biv_sub(const Field& F, const Biv& a, const Biv& b) {
    Biv r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = uni_sub(F, r[i], b[i]);
    return biv_trim(std::move(r));
}

// a / b where the division over GF(q)[X2] is exact.
Uni uni_exact_div(const Field& F, const Uni& a, const Uni& b) {
    auto [q, r] = uni_divmod(F, a, b);
    if (!r.empty()) fail(errc::bad_params, "inexact univariate division");
    return q;
}

Uni biv_content(const Field& F, const Biv& f) {
    Uni c;
    for (const auto& coef : f) c = uni_gcd(F, c, coef);
    return c;
}

Biv biv_primitive(const Field& F, const Biv& f, const Uni& content) {
    Biv r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = f[i].empty() ? Uni{} : uni_exact_div(F, f[i], content);
    return r;
}

// Pseudo-remainder of f by g with respect to X1 (g nonzero in X1-degree).
Biv biv_prem(const Field& F, Biv f, const Biv& g) {
    int dg = biv_deg1(g);
    const Uni& lg = g.back();
    while (!biv_is_zero(f) && biv_deg1(f) >= dg) {
        int shift = biv_deg1(f) - dg;
        Uni lf = f.back();
        Biv scaled_g(shift);
        for (const auto& coef : g) scaled_g.push_back(uni_mul(F, coef, lf));
        f = biv_sub(F, biv_scale(F, f, lg), scaled_g);
    }
    return f;
}

Biv biv_gcd(const Field& F, Biv f, Biv g) {
    f = biv_trim(std::move(f));
    g = biv_trim(std::move(g));
    if (biv_is_zero(f)) return g;
    if (biv_is_zero(g)) return f;
    if (biv_deg1(f) == 0 && biv_deg1(g) == 0) return {uni_gcd(F, f[0], g[0])};
    if (biv_deg1(f) == 0) return {uni_gcd(F, f[0], biv_content(F, g))};
    if (biv_deg1(g) == 0) return {uni_gcd(F, g[0], biv_content(F, f))};
    Uni cf = biv_content(F, f), cg = biv_content(F, g);
    Uni c = uni_gcd(F, cf, cg);
    Biv fp = biv_primitive(F, f, cf), gp = biv_primitive(F, g, cg);
    if (biv_deg1(fp) < biv_deg1(gp)) std::swap(fp, gp);
    while (true) {
        Biv r = biv_prem(F, fp, gp);
        if (biv_is_zero(r)) break;
        if (biv_deg1(r) == 0) {
            // Primitive parts are coprime in X1; only the content survives.
            return {c};
        }
        fp = std::move(gp);
        gp = biv_primitive(F, r, biv_content(F, r));
    }
    Biv result = biv_primitive(F, gp, biv_content(F, gp));
    return biv_trim(biv_scale(F, result, c));
}

// Dehomogenize a homogeneous polynomial not divisible by X3 at X3 = 1.
Biv dehomogenize(const Field& F, const HomPoly& f) {
    Biv out;
    for (const auto& [m, coef] : f.terms()) {
        if ((std::size_t)m[0] >= out.size()) out.resize(m[0] + 1);
        Uni& u = out[m[0]];
        if ((std::size_t)m[1] >= u.size()) u.resize(m[1] + 1, F.zero());
        u[m[1]] = coef;
    }
    for (auto& u : out) u = uni_trim(F, std::move(u));
    return biv_trim(std::move(out));
}

HomPoly homogenize(const Field& F, const Biv& b, int x3_power) {
    int total = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j)
            if (!F.is_zero(b[i][j])) total = std::max(total, (int)(i + j));
    HomPoly out(F, total + x3_power);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j)
            if (!F.is_zero(b[i][j]))
                out.set_coeff({(int)i, (int)j, total - (int)(i + j) + x3_power}, b[i][j]);
    return out;
}

int x3_multiplicity(const HomPoly& f) {
    int mult = f.degree();
    for (const auto& [m, c] : f.terms()) mult = std::min(mult, m[2]);
    return mult;
}

HomPoly strip_x3(const Field& F, const HomPoly& f, int mult) {
    HomPoly out(F, f.degree() - mult);
    for (const auto& [m, c] : f.terms()) out.set_coeff({m[0], m[1], m[2] - mult}, c);
    return out;
}

} // namespace

HomPoly trivariate_gcd(const HomPoly& f, const HomPoly& g) {
    if (f.is_zero() && g.is_zero()) fail(errc::both_zero, "gcd of two zero polynomials");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    const Field& F = f.field();
    int af = x3_multiplicity(f), ag = x3_multiplicity(g);
    Biv bf = dehomogenize(F, strip_x3(F, f, af));
    Biv bg = dehomogenize(F, strip_x3(F, g, ag));
    Biv d = biv_gcd(F, std::move(bf), std::move(bg));
    return homogenize(F, d, std::min(af, ag)).normalized();
}

bool divides(const HomPoly& g, const HomPoly& f) {
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (g.degree() > f.degree()) return false;
    return trivariate_gcd(g, f) == g.normalized();
}

} // namespace arcs
