#pragma once

#include <map>
#include <optional>
#include <variant>

#include "arcs/bipoly.hpp"
#include "arcs/gcd.hpp"
#include "arcs/socle.hpp"
#include "arcs/ttform.hpp"

namespace arcs {

/// Exact rational, for the degree-bound comparisons (no floating point).
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    double approx() const { return (double)num / (double)den; }
};

struct Bounds {
    uint32_t q = 0, p = 0, t = 0;
    uint32_t eps = 0; // floor(log_p t)
    uint32_t pe = 1;  // p^eps
    uint32_t d = 0;   // t + pe, the certificate degree budget
    bool cond_ok = false; // pe(t + pe/2 + 3/2) <= (t+2)(t+1)/2, exactly
    // For a queried curve degree d': d'/(d'+1) (q+1+q/p) + 1, and the largest
    // arc size strictly below it.
    std::optional<Rational> boundeddeg_value;
    std::optional<uint32_t> boundeddeg_max_arc;
};

Bounds compute_bounds(uint32_t q, uint32_t p, uint32_t t,
                      std::optional<uint32_t> d_prime = std::nullopt);

/// The index set W and the coefficient polynomials rho_w(Y) of
/// F(X+Y,Y) - F(X,Y): for w = (i,j,k) with t-pe <= i+j+k <= t-1, rho_w is
/// homogeneous in Y of degree 2t - (i+j+k) and vanishes on the arc.
struct RhoSystem {
    std::vector<Mono> W;
    std::map<Mono, HomPoly, MonoLess> rhos;
};

RhoSystem rho_system(const BiPoly& F, const Bounds& B);

/// Gcd of the rho polynomials together with a basis of the degree-t
/// vanishing space. Nonconstant degree means a single low-degree curve
/// through the arc; constant gcd signals the two-coprime-curves branch.
HomPoly almost_phi(const Arc& A, const RhoSystem& R, const VanishingSpace& V);

/// f + lambda*g for the first lambda (field-encoding order) making the
/// combination coprime to h. Requires gcd(f,g) constant.
HomPoly coprime_combination(const HomPoly& f, const HomPoly& g, const HomPoly& h);

struct HyperbolicReport {
    bool pass = true;
    // Witness bisecant (pair of arc points) when pass is false.
    Point x, y;
};

/// For every bisecant of A, the restriction of phi to the line (in the
/// basis given by the two arc points) must be a nonzero constant times
/// s^i u^j with i+j = deg phi.
HyperbolicReport hyperbolic_test(const HomPoly& phi, const Arc& A);

/// A degree-2 form through the points (unique up to scalar for >= 5 points
/// in general position), or nothing if no conic contains them.
std::optional<HomPoly> conic_fit(const Field& F, const std::vector<Point>& pts);

struct CurveCertificate {
    std::array<HomPoly, 2> curves;
    uint32_t d = 0; // degree budget
    bool vanish_on_arc = false;
    bool coprime = false;
};

struct ConicContainment {
    HomPoly conic;
};

using CertificateResult = std::variant<CurveCertificate, ConicContainment>;

/// Certificate search: conic containment short-circuits;
/// otherwise builds F, the rho system, and the gcd curve, then searches the
/// vanishing spaces up to degree d = t + pe for a coprime mate.
CertificateResult coprime_certificate(const Arc& A);

} // namespace arcs
