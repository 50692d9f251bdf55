#include "arcs/linalg.hpp"

namespace arcs {

std::vector<std::size_t> Mat::rref() {
    const Field& F = *field_;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = rows_;
        for (std::size_t r = row; r < rows_; ++r)
            if (!F.is_zero(at(r, col))) { sel = r; break; }
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(sel, c));
        Fe inv = F.inv(at(row, col));
        for (std::size_t c = col; c < cols_; ++c) at(row, c) = F.mul(at(row, c), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || F.is_zero(at(r, col))) continue;
            Fe f = at(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                at(r, c) = F.sub(at(r, c), F.mul(f, at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t Mat::rank() const {
    Mat copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Fe>> Mat::nullspace() const {
    const Field& F = *field_;
    Mat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Fe>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Fe> v(cols_, Fe{0});
        v[f] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = F.neg(m.at(i, f));
        basis.push_back(std::move(v));
    }
    return rref_rows(F, std::move(basis));
}

std::vector<std::vector<Fe>> rref_rows(const Field& F, std::vector<std::vector<Fe>> rows) {
    if (rows.empty()) return rows;
    std::size_t cols = rows[0].size();
    Mat m(F, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    auto pivots = m.rref();
    std::vector<std::vector<Fe>> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Fe> v(cols);
        for (std::size_t c = 0; c < cols; ++c) v[c] = m.at(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

bool IncrementalRank::try_add(std::vector<Fe> v) {
    const Field& F = *field_;
    for (const auto& [piv, b] : basis_) {
        if (F.is_zero(v[piv])) continue;
        Fe f = v[piv];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(f, b[i]));
    }
    std::size_t piv = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!F.is_zero(v[i])) { piv = i; break; }
    if (piv == v.size()) return false;
    Fe inv = F.inv(v[piv]);
    for (auto& x : v) x = F.mul(x, inv);
    basis_.emplace_back(piv, std::move(v));
    return true;
}

std::vector<Fe> reduce_against(const Field& F, std::vector<Fe> v,
                               const std::vector<std::vector<Fe>>& basis) {
    for (const auto& b : basis) {
        std::size_t piv = b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!F.is_zero(b[i])) { piv = i; break; }
        if (piv == b.size() || F.is_zero(v[piv])) continue;
        Fe f = F.div(v[piv], b[piv]);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(f, b[i]));
    }
    return v;
}

} // namespace arcs
