#pragma once

#include "arcs/hompoly.hpp"
#include "arcs/linalg.hpp"

namespace arcs {

/// Evaluation matrix at degree r: rows indexed by the monomial basis of
/// V_r[X] in graded-lex order, columns by the given points.
Mat eval_matrix(const Field& F, const std::vector<Point>& D, int r);

/// Basis, in reduced echelon form under graded-lex monomial order, of the
/// space of degree-r homogeneous polynomials vanishing on D.
struct VanishingSpace {
    int degree = 0;
    std::vector<HomPoly> basis;

    std::size_t dim() const { return basis.size(); }
    /// Coefficient-vector view of the basis (graded-lex monomial order).
    std::vector<std::vector<Fe>> coeff_rows(const Field& F) const;
    /// True iff p lies in the span of the basis.
    bool contains(const HomPoly& p) const;
};

VanishingSpace vanishing_space(const Field& F, const std::vector<Point>& D, int r);

/// Greedy r-socle of D: extends the seed in canonical point order to a
/// column basis of the evaluation matrix. Size is C(r+2,2) - dim of the
/// degree-r vanishing space of D.
std::vector<Point> socle(const Field& F, const std::vector<Point>& D, int r,
                         const std::vector<Point>& seed = {});

class Arc;

/// Nested socles S_0 <= S_1 <= ... <= S_rmax of A at degrees t, t+1, ...,
/// t+rmax.
std::vector<std::vector<Point>> socle_chain(const Arc& A, int r_max);

} // namespace arcs
