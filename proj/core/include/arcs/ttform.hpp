#pragma once

#include "arcs/bipoly.hpp"
#include "arcs/socle.hpp"
#include "arcs/tangents.hpp"

namespace arcs {

/// p^floor(log_p t): the largest power of the characteristic not
/// exceeding t.
uint32_t char_power_below(uint32_t p, uint32_t t);

struct SSelection {
    std::vector<Point> S0; // a t-socle of A
    std::vector<Point> S;  // S0 plus min{C(t+2,2), |A \ S0|} further points
};

/// Deterministic choice of S0 and S: greedy t-socle, extended first by the
/// socle-chain points at degrees t+1..t+p^eps (so S contains a (t+r)-socle
/// for every r <= p^eps), then by remaining arc points in canonical order.
SSelection select_S(const Arc& A);

/// The (t,t)-form interpolating the scaled tangent forms. Satisfies
/// F(X,y) = f_y(X) for y in S, F(X,y) = f_y(X) mod the degree-t vanishing
/// space for y in A, and F(x,y) = (-1)^{t+1} F(y,x) on A x A. Scaled so
/// F(X,e) = f_e(X) for the tangent system's base point e.
BiPoly build_F(const Arc& A, const TangentSystem& sys);

struct FReport {
    bool pass = true;
    std::string witness; // human-readable description of the first failure
};

FReport verify_F(const Arc& A, const TangentSystem& sys, const BiPoly& F);

/// Points of Tan(y): the union of the t tangent lines at the arc point y,
/// excluding y itself, in canonical order.
std::vector<Point> tangent_point_set(const Arc& A, const Point& y);

} // namespace arcs
