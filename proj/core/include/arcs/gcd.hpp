#pragma once

#include "arcs/hompoly.hpp"

namespace arcs {

/// Dense univariate polynomial over GF(q), constant term first, no trailing
/// zero coefficients (empty = zero polynomial).
using Uni = std::vector<Fe>;

Uni uni_trim(const Field& F, Uni f);
int uni_deg(const Uni& f);
Uni uni_mul(const Field& F, const Uni& a, const Uni& b);
Uni uni_sub(const Field& F, const Uni& a, const Uni& b);
/// Quotient and remainder; b nonzero.
std::pair<Uni, Uni> uni_divmod(const Field& F, Uni a, const Uni& b);
/// Monic gcd.
Uni uni_gcd(const Field& F, Uni a, Uni b);

/// Gcd of two homogeneous trivariate polynomials, normalized so the
/// graded-lex smallest nonzero coefficient is 1. Computed by stripping the
/// common X3 power, dehomogenizing at X3 = 1, and running a primitive
/// pseudo-remainder sequence in X1 with univariate contents in X2.
HomPoly trivariate_gcd(const HomPoly& f, const HomPoly& g);

/// True iff g divides f exactly (f = g * h for some homogeneous h).
bool divides(const HomPoly& g, const HomPoly& f);

} // namespace arcs
