#pragma once

#include <vector>

#include "arcs/gf.hpp"

namespace arcs {

/// Dense matrix over GF(q), row major.
class Mat {
  public:
    Mat(const Field& F, std::size_t rows, std::size_t cols)
        : field_(&F), rows_(rows), cols_(cols), data_(rows * cols, Fe{0}) {}

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns the pivot columns in
    /// increasing order. Pivot rule: first nonzero entry scanning columns
    /// left to right, rows top to bottom.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Reduced-echelon basis of the right nullspace (each basis vector a row
    /// of the returned matrix-like vector of rows).
    std::vector<std::vector<Fe>> nullspace() const;

  private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<Fe> data_;
};

/// Reduce a set of vectors to reduced echelon form; drops zero rows.
std::vector<std::vector<Fe>> rref_rows(const Field& F, std::vector<std::vector<Fe>> rows);

/// Incremental Gaussian elimination for greedy independent-column selection.
class IncrementalRank {
  public:
    explicit IncrementalRank(const Field& F) : field_(&F) {}

    /// Returns true (and absorbs the vector) if v is independent of the
    /// vectors accepted so far.
    bool try_add(std::vector<Fe> v);
    std::size_t rank() const { return basis_.size(); }

  private:
    const Field* field_;
    // Reduced vectors keyed by their pivot position.
    std::vector<std::pair<std::size_t, std::vector<Fe>>> basis_;
};

/// Residue of v after elimination against reduced-echelon rows `basis`
/// (as produced by rref_rows). Zero residue means v is in the span.
std::vector<Fe> reduce_against(const Field& F, std::vector<Fe> v,
                               const std::vector<std::vector<Fe>>& basis);

} // namespace arcs
