#pragma once

#include <optional>

#include "arcs/hompoly.hpp"

namespace arcs {

/// All points x not in A with A + {x} still an arc, in canonical order.
/// Empty iff A is complete.
std::vector<Point> extensions(const Arc& A);

bool is_complete(const Arc& A);

/// Canonical representative of the PGL(3,q)-orbit of A: the lexicographically
/// least image of A over all projectivities sending an ordered 4-subset of A
/// (in general position) to the standard frame. Requires |A| >= 4.
std::vector<Point> canonical_form(const Arc& A);

struct ClassificationResult {
    uint32_t q = 0;
    std::size_t size = 0;
    bool complete_only = false;
    std::size_t count = 0;
    std::vector<std::vector<Point>> representatives; // canonical forms
};

/// Exact count of projective equivalence classes of (complete) arcs of the
/// given size, by orderly extension from the standard frame with
/// canonical-form isomorph rejection. Guaranteed budget covers q <= 13;
/// larger q requires allow_large.
ClassificationResult classify(const Field& F, std::size_t size, bool complete_only,
                              bool allow_large = false);

struct KestenbandSpec {
    std::array<std::array<Fe, 3>, 3> H;
};

struct KestenbandArc {
    Arc arc;
    KestenbandSpec spec;
    HomPoly hermitian1; // x1^{sq+1} + x2^{sq+1} + x3^{sq+1}
    HomPoly hermitian2; // sum_{i,j} h_ij x_i^sq x_j
};

/// The intersection of two Hermitian curves for square q: a complete arc of
/// size q - sqrt(q) + 1. If no H is supplied, entries are scanned in
/// field-encoding order until the Hermitian and irreducibility conditions
/// hold and the intersection validates.
KestenbandArc kestenband(const Field& F, std::optional<KestenbandSpec> spec = std::nullopt);

} // namespace arcs
