#pragma once

#include "arcs/bipoly.hpp"
#include "arcs/tangents.hpp"

namespace arcs {

/// Interpolated dual curve: phi(Z) of degree m*t in the dual variables,
/// with G(X,Y) its pullback under Z1 = X2 Y3 - Y2 X3, Z2 = X3 Y1 - Y3 X1,
/// Z3 = X1 Y2 - X2 Y1 (so det(X,Y,u) = u.Z). m = 2 for q odd, 1 for q even,
/// and G(X,a) = f_a(X)^m for every arc point a.
struct DualCurve {
    int m = 0;
    HomPoly phi; // degree m*t, variables Z
    BiPoly G;    // degree (m*t, m*t)
};

DualCurve build_dual_curve(const TangentSystem& S);

struct DualReport {
    bool pass = true;
    // When pass is false: the arc point where G(X,a) != f_a(X)^m, or the
    // tangent whose dual coordinates are not a zero of phi.
    std::optional<Point> bad_point;
    std::optional<LinearForm> bad_tangent;
};

/// Checks G(X,a) = f_a(X)^m as a polynomial identity for every a in A, and
/// phi(z) = 0 at the dual coordinates z of every tangent line of the arc.
DualReport verify_dual(const TangentSystem& S, const DualCurve& D);

} // namespace arcs
