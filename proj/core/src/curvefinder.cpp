#include "arcs/curvefinder.hpp"

#include <algorithm>
#include <numeric>

namespace arcs {

Bounds compute_bounds(uint32_t q, uint32_t p, uint32_t t, std::optional<uint32_t> d_prime) {
    if (t < 1 || p < 2 || !is_prime(p) || q % p != 0)
        fail(errc::bad_params, "compute_bounds needs t >= 1 and p a prime divisor of q");
    uint32_t qq = q;
    while (qq % p == 0) qq /= p;
    if (qq != 1) fail(errc::bad_params, "q must be a power of p");
    Bounds B;
    B.q = q;
    B.p = p;
    B.t = t;
    B.pe = char_power_below(p, t);
    B.eps = 0;
    for (uint32_t x = B.pe; x > 1; x /= p) ++B.eps;
    B.d = t + B.pe;
    // pe(t + pe/2 + 3/2) <= (t+2)(t+1)/2, cleared of denominators.
    B.cond_ok = (int64_t)B.pe * (2 * (int64_t)t + B.pe + 3) <= (int64_t)(t + 2) * (t + 1);
    if (d_prime) {
        int64_t dp = *d_prime;
        // d'/(d'+1) (q+1+q/p) + 1 over the common denominator (d'+1)p.
        int64_t num = dp * ((int64_t)q * p + p + q) + (dp + 1) * p;
        int64_t den = (dp + 1) * (int64_t)p;
        int64_t g = std::gcd(num, den);
        B.boundeddeg_value = Rational{num / g, den / g};
        // Largest integer strictly below num/den.
        int64_t floor_v = num / den;
        B.boundeddeg_max_arc = (uint32_t)(num % den == 0 ? floor_v - 1 : floor_v);
    }
    return B;
}

RhoSystem rho_system(const BiPoly& F, const Bounds& B) {
    int t = (int)B.t;
    if (F.deg_x() != t || F.deg_y() != t)
        fail(errc::bad_params, "rho_system expects a (t,t)-form");
    RhoSystem R;
    auto shifted = F.shift_x_by_y(); // F(X+Y,Y) by X-monomial
    int lo = t - (int)B.pe, hi = t - 1;
    for (int s = std::max(lo, 0); s <= hi; ++s) {
        for (const Mono& w : monomials_of_degree(s)) {
            if (w[0] > t - 1 || w[1] > t - 1 || w[2] > t - 1) continue;
            auto it = shifted.find(w);
            // F(X,Y) contributes no X-monomial of degree < t, so the
            // coefficient of X^w in F(X+Y,Y) - F(X,Y) is just the shift term.
            HomPoly rho = (it != shifted.end()) ? it->second
                                                : HomPoly(F.field(), 2 * t - s);
            R.W.push_back(w);
            R.rhos.emplace(w, std::move(rho));
        }
    }
    return R;
}

HomPoly almost_phi(const Arc& A, const RhoSystem& R, const VanishingSpace& V) {
    const Field& F = A.field();
    if (F.q() % 2 == 0) fail(errc::even_characteristic, "almost_phi requires q odd");
    std::vector<const HomPoly*> gens;
    for (const auto& [w, rho] : R.rhos)
        if (!rho.is_zero()) gens.push_back(&rho);
    for (const auto& b : V.basis)
        if (!b.is_zero()) gens.push_back(&b);
    if (gens.empty())
        fail(errc::all_generators_zero,
             "all rho and vanishing-space generators are zero (hypothesis violated or bug)");
    HomPoly g = *gens.front();
    for (std::size_t i = 1; i < gens.size(); ++i) {
        if (g.degree() == 0) break;
        g = trivariate_gcd(g, *gens[i]);
    }
    return g.normalized();
}

HomPoly coprime_combination(const HomPoly& f, const HomPoly& g, const HomPoly& h) {
    const Field& F = f.field();
    if (trivariate_gcd(f, g).degree() != 0)
        fail(errc::not_coprime, "inputs f and g are not coprime");
    for (uint32_t v = 0; v < F.q(); ++v) {
        HomPoly cand = f.add(g.scaled(Fe{v}));
        if (cand.is_zero()) continue;
        if (trivariate_gcd(cand, h).degree() == 0) return cand;
    }
    fail(errc::no_lambda, "no lambda gives a combination coprime to h");
}

HyperbolicReport hyperbolic_test(const HomPoly& phi, const Arc& A) {
    if (phi.is_zero()) fail(errc::zero_polynomial, "hyperbolic_test on the zero polynomial");
    const Field& F = A.field();
    const auto& pts = A.sorted_points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            // Restriction to the bisecant, in the basis (x, y): a binary
            // form in (s, u); point = s*x + u*y.
            auto b = phi.restrict_to_line(pts[i], pts[j]);
            // Must be c * s^a u^b: exactly one nonzero coefficient.
            int nonzero = 0;
            for (const Fe& c : b)
                if (!F.is_zero(c)) ++nonzero;
            if (nonzero != 1) return HyperbolicReport{false, pts[i], pts[j]};
        }
    return HyperbolicReport{};
}

std::optional<HomPoly> conic_fit(const Field& F, const std::vector<Point>& pts) {
    if (pts.size() < 5) fail(errc::too_few_points, "conic_fit needs at least 5 points");
    auto V = vanishing_space(F, pts, 2);
    if (V.dim() == 0) return std::nullopt;
    return V.basis.front().normalized();
}

namespace {

bool vanishes_on(const HomPoly& f, const Arc& A) {
    const Field& F = A.field();
    for (const Point& x : A.points())
        if (!F.is_zero(f.eval(x))) return false;
    return true;
}

} // namespace

CertificateResult coprime_certificate(const Arc& A) {
    const Field& F = A.field();
    if (F.q() % 2 == 0) fail(errc::even_characteristic, "certificate search requires q odd");
    uint32_t t = A.t();
    if (t < 1) fail(errc::deficiency_zero, "certificate search requires t >= 1");

    // Conic containment short-circuits the search.
    {
        auto V2 = vanishing_space(F, A.points(), 2);
        if (V2.dim() > 0) return ConicContainment{V2.basis.front().normalized()};
    }

    Bounds B = compute_bounds(F.q(), F.p(), t);
    auto sys = build_tangent_system(A);
    auto Fform = build_F(A, sys);
    auto Vt = vanishing_space(F, A.points(), (int)t);
    auto R = rho_system(Fform, B);
    HomPoly phi = almost_phi(A, R, Vt);

    // Vanishing-space bases for each degree up to the budget.
    std::vector<VanishingSpace> spaces;
    for (uint32_t r = 1; r <= B.d; ++r) spaces.push_back(vanishing_space(F, A.points(), (int)r));
    auto space_at = [&](uint32_t r) -> const VanishingSpace& { return spaces[r - 1]; };

    auto make_cert = [&](HomPoly a, HomPoly b) {
        CurveCertificate cert;
        cert.curves = {a.normalized(), b.normalized()};
        cert.d = B.d;
        cert.vanish_on_arc = vanishes_on(cert.curves[0], A) && vanishes_on(cert.curves[1], A);
        cert.coprime = trivariate_gcd(cert.curves[0], cert.curves[1]).degree() == 0;
        return cert;
    };

    if (phi.degree() >= 1 && vanishes_on(phi, A)) {
        // One curve in hand; search lowest degrees first for a coprime mate.
        for (uint32_t r = 1; r <= B.d; ++r) {
            for (const auto& b : space_at(r).basis)
                if (trivariate_gcd(b, phi).degree() == 0) return make_cert(phi, b);
        }
        // No basis element is coprime; try combinations within one degree.
        for (uint32_t r = 1; r <= B.d; ++r) {
            const auto& basis = space_at(r).basis;
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = i + 1; j < basis.size(); ++j) {
                    if (trivariate_gcd(basis[i], basis[j]).degree() != 0) continue;
                    try {
                        HomPoly mate = coprime_combination(basis[i], basis[j], phi);
                        return make_cert(phi, mate);
                    } catch (const error&) {
                        continue;
                    }
                }
        }
    }

    // Constant gcd (or no usable phi): search pairs across the vanishing
    // spaces directly, lowest total degree first.
    for (uint32_t total = 2; total <= 2 * B.d; ++total) {
        for (uint32_t r1 = 1; r1 <= B.d; ++r1) {
            if (total < r1 || total - r1 > B.d || total - r1 < r1) continue;
            uint32_t r2 = total - r1;
            const auto& b1 = space_at(r1).basis;
            const auto& b2 = space_at(r2).basis;
            for (std::size_t i = 0; i < b1.size(); ++i)
                for (std::size_t j = (r1 == r2 ? i + 1 : 0); j < b2.size(); ++j) {
                    if (trivariate_gcd(b1[i], b2[j]).degree() == 0)
                        return make_cert(b1[i], b2[j]);
                }
        }
    }

    std::string evidence = "no coprime pair within degree budget d = " + std::to_string(B.d) +
                           " (cond_ok = " + (B.cond_ok ? "true" : "false") + ")";
    fail(errc::not_found, evidence);
}

} // namespace arcs
