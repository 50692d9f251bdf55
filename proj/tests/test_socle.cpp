#include <doctest.h>

#include <random>

#include "arcs/socle.hpp"
#include "test_util.hpp"

using namespace arcs;
using namespace testutil;

TEST_CASE("vanishing space basis actually vanishes and has complementary dim") {
    std::mt19937 rng(21);
    for (uint32_t q : {5u, 7u, 9u}) {
        Field F = Field::make(q == 9 ? 3 : q, q == 9 ? 2 : 1);
        auto pts = all_points(F);
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(pts.begin(), pts.end(), rng);
            std::vector<Point> D(pts.begin(), pts.begin() + 4 + rng() % 8);
            int r = 2 + rng() % 3;
            auto V = vanishing_space(F, D, r);
            CHECK(V.dim() == (std::size_t)((r + 2) * (r + 1) / 2) - eval_matrix(F, D, r).rank());
            for (const HomPoly& f : V.basis)
                for (const Point& x : D) CHECK(f.eval(x) == F.zero());
        }
    }
}

TEST_CASE("socle size formula over 200 random sub-point-sets") {
    std::mt19937 rng(22);
    int done = 0;
    std::vector<Field> fields;
    for (uint32_t q : {5u, 7u, 8u, 9u, 11u, 13u}) {
        uint32_t p = q, h = 1;
        if (q == 8) p = 2, h = 3;
        if (q == 9) p = 3, h = 2;
        fields.push_back(Field::make(p, h));
    }
    while (done < 200) {
        const Field& F = fields[done % fields.size()];
        auto pts = all_points(F);
        std::shuffle(pts.begin(), pts.end(), rng);
        std::vector<Point> D(pts.begin(), pts.begin() + 3 + rng() % 12);
        int r = 1 + rng() % 4;
        auto S = socle(F, D, r);
        auto V = vanishing_space(F, D, r);
        // |socle| = C(r+2,2) - dim of the degree-r vanishing space
        CHECK(S.size() == (std::size_t)((r + 2) * (r + 1) / 2) - V.dim());
        // a socle is itself a subset of D with full evaluation rank
        CHECK(eval_matrix(F, S, r).rank() == S.size());
        ++done;
    }
}

TEST_CASE("socle extends a seed when the seed columns are independent") {
    Field F = Field::make(7, 1);
    Arc C = conic_arc(F);
    auto D = C.sorted_points();
    std::vector<Point> seed(D.begin(), D.begin() + 3);
    auto S = socle(F, D, 2, seed);
    for (std::size_t i = 0; i < seed.size(); ++i) CHECK(S[i] == seed[i]);
}

TEST_CASE("socle chain is nested with bounded increments") {
    std::mt19937 rng(23);
    for (uint32_t q : {7u, 9u, 11u, 13u}) {
        Field F = Field::make(q == 9 ? 3 : q, q == 9 ? 2 : 1);
        for (int k : {2, 3, 4}) {
            Arc A = conic_minus(F, k);
            uint32_t t = A.t();
            int r_max = 3;
            auto chain = socle_chain(A, r_max);
            REQUIRE(chain.size() == (std::size_t)r_max + 1);
            for (int r = 1; r <= r_max; ++r) {
                // nested: S_{r-1} is a prefix of S_r
                REQUIRE(chain[r].size() >= chain[r - 1].size());
                for (std::size_t i = 0; i < chain[r - 1].size(); ++i)
                    CHECK(chain[r][i] == chain[r - 1][i]);
                // increment bound: |S_r \ S_{r-1}| grows by at most
                // r(t + r/2 + 3/2), i.e. |S_r| - |S_0| <= r(2t + r + 3)/2
                std::size_t inc2 = 2 * (chain[r].size() - chain[0].size());
                CHECK(inc2 <= (std::size_t)r * (2 * t + r + 3));
            }
        }
    }
}
