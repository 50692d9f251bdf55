#include <doctest.h>

#include <random>

#include "arcs/linalg.hpp"
#include "test_util.hpp"

using namespace arcs;
using namespace testutil;

namespace {

Mat random_mat(const Field& F, std::size_t r, std::size_t c, std::mt19937& rng) {
    Mat m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_fe(F, rng);
    return m;
}

} // namespace

TEST_CASE("rref produces reduced echelon form") {
    Field F = Field::make(7, 1);
    std::mt19937 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        Mat m = random_mat(F, 5, 8, rng);
        Mat r = m;
        auto pivots = r.rref();
        // pivot entries are 1, the rest of each pivot column is 0
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            CHECK(r.at(k, pivots[k]) == F.one());
            for (std::size_t i = 0; i < r.rows(); ++i)
                if (i != k) CHECK(r.at(i, pivots[k]) == F.zero());
        }
        CHECK(std::is_sorted(pivots.begin(), pivots.end()));
    }
}

TEST_CASE("nullspace vectors are killed by the matrix and count is right") {
    Field F = Field::make(5, 1);
    std::mt19937 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 3 + rng() % 4, cols = 3 + rng() % 5;
        Mat m = random_mat(F, rows, cols, rng);
        auto ns = m.nullspace();
        CHECK(ns.size() == cols - m.rank());
        for (const auto& v : ns) {
            for (std::size_t i = 0; i < rows; ++i) {
                Fe s = F.zero();
                for (std::size_t j = 0; j < cols; ++j) s = F.add(s, F.mul(m.at(i, j), v[j]));
                CHECK(s == F.zero());
            }
        }
    }
}

TEST_CASE("incremental rank agrees with batch rank") {
    Field F = Field::make(3, 2);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 6, cols = 4;
        Mat m = random_mat(F, rows, cols, rng);
        IncrementalRank inc(F);
        for (std::size_t i = 0; i < rows; ++i) {
            std::vector<Fe> v(cols);
            for (std::size_t j = 0; j < cols; ++j) v[j] = m.at(i, j);
            inc.try_add(v);
        }
        CHECK(inc.rank() == m.rank());
    }
}

TEST_CASE("reduce_against vanishes exactly on the span") {
    Field F = Field::make(7, 1);
    std::mt19937 rng(4);
    std::vector<std::vector<Fe>> gens;
    for (int i = 0; i < 2; ++i) {
        std::vector<Fe> v(5);
        for (auto& x : v) x = random_fe(F, rng);
        gens.push_back(v);
    }
    auto basis = rref_rows(F, gens);
    // combinations reduce to zero
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Fe> v(5, F.zero());
        for (const auto& g : gens) {
            Fe c = random_fe(F, rng);
            for (std::size_t j = 0; j < 5; ++j) v[j] = F.add(v[j], F.mul(c, g[j]));
        }
        auto res = reduce_against(F, v, basis);
        for (Fe x : res) CHECK(x == F.zero());
    }
}
