#include <doctest.h>

#include <random>

#include "arcs/bipoly.hpp"
#include "test_util.hpp"

using namespace arcs;
using namespace testutil;

TEST_CASE("monomials_of_degree counts C(r+2,2) and is sorted") {
    for (int r = 0; r <= 8; ++r) {
        auto ms = monomials_of_degree(r);
        CHECK((int)ms.size() == (r + 2) * (r + 1) / 2);
        CHECK(std::is_sorted(ms.begin(), ms.end(), MonoLess{}));
        for (const Mono& m : ms) CHECK(m[0] + m[1] + m[2] == r);
    }
}

TEST_CASE("product evaluates to product of evaluations") {
    Field F = Field::make(11, 1);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        HomPoly f = random_poly(F, 2, rng), g = random_poly(F, 3, rng);
        HomPoly fg = f.mul(g);
        CHECK(fg.degree() == 5);
        for (int i = 0; i < 10; ++i) {
            Point x = random_point(F, rng);
            CHECK(fg.eval(x) == F.mul(f.eval(x), g.eval(x)));
        }
    }
}

TEST_CASE("add and scale evaluate pointwise") {
    Field F = Field::make(3, 2);
    std::mt19937 rng(6);
    HomPoly f = random_poly(F, 3, rng), g = random_poly(F, 3, rng);
    Fe c = random_nonzero(F, rng);
    for (int i = 0; i < 20; ++i) {
        Point x = random_point(F, rng);
        CHECK(f.add(g).eval(x) == F.add(f.eval(x), g.eval(x)));
        CHECK(f.scaled(c).eval(x) == F.mul(c, f.eval(x)));
    }
}

TEST_CASE("restriction to a line matches direct substitution") {
    Field F = Field::make(7, 1);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        HomPoly f = random_poly(F, 4, rng);
        Point x = random_point(F, rng), y = random_point(F, rng);
        auto bin = f.restrict_to_line(x, y);
        REQUIRE(bin.size() == 5);
        for (uint32_t s = 0; s < F.q(); ++s)
            for (uint32_t u = 0; u < 2; ++u) {
                std::array<Fe, 3> pt;
                for (int i = 0; i < 3; ++i)
                    pt[i] = F.add(F.mul(Fe{s}, x.c[i]), F.mul(Fe{u}, y.c[i]));
                Fe direct = f.eval(pt);
                Fe sum = F.zero();
                // bin[k] multiplies s^k u^(4-k)
                for (int k = 0; k <= 4; ++k)
                    sum = F.add(sum, F.mul(bin[k], F.mul(F.pow(Fe{s}, k), F.pow(Fe{u}, 4 - k))));
                CHECK(direct == sum);
            }
    }
}

TEST_CASE("normalized sets the least nonzero coefficient to one") {
    Field F = Field::make(13, 1);
    std::mt19937 rng(8);
    HomPoly f = random_nonzero_poly(F, 3, rng);
    HomPoly n = f.normalized();
    CHECK(n.terms().begin()->second == F.one());
    CHECK(n.normalized() == n);
}

TEST_CASE("binomial coefficients reduce correctly") {
    Field F = Field::make(5, 1);
    // C(5,1) = 5 = 0 mod 5, C(4,2) = 6 = 1 mod 5
    CHECK(binom_fe(F, 5, 1) == F.zero());
    CHECK(binom_fe(F, 4, 2) == F.one());
    CHECK(binom_fe(F, 6, 3) == F.zero()); // 20
}

TEST_CASE("bipoly evaluation sections agree with full evaluation") {
    Field F = Field::make(7, 1);
    std::mt19937 rng(9);
    BiPoly P(F, 2, 3);
    for (const Mono& mx : monomials_of_degree(2))
        for (const Mono& my : monomials_of_degree(3))
            P.set_coeff({mx, my}, random_fe(F, rng));
    for (int i = 0; i < 20; ++i) {
        Point x = random_point(F, rng), y = random_point(F, rng);
        CHECK(P.eval(x, y) == P.eval_y(y).eval(x));
        CHECK(P.eval(x, y) == P.eval_x(x).eval(y));
        CHECK(P.swapped().eval(y, x) == P.eval(x, y));
    }
}

TEST_CASE("shift_x_by_y reconstructs P(X+Y, Y)") {
    Field F = Field::make(5, 1);
    std::mt19937 rng(10);
    BiPoly P(F, 2, 2);
    for (const Mono& mx : monomials_of_degree(2))
        for (const Mono& my : monomials_of_degree(2))
            P.set_coeff({mx, my}, random_fe(F, rng));
    auto shifted = P.shift_x_by_y();
    for (int i = 0; i < 30; ++i) {
        Point x = random_point(F, rng), y = random_point(F, rng);
        std::array<Fe, 3> xy;
        for (int k = 0; k < 3; ++k) xy[k] = F.add(x.c[k], y.c[k]);
        Fe want = P.eval_y(y).eval(xy);
        Fe got = F.zero();
        for (const auto& [m, coeff] : shifted) {
            Fe xm = F.one();
            for (int k = 0; k < 3; ++k) xm = F.mul(xm, F.pow(x.c[k], m[k]));
            got = F.add(got, F.mul(xm, coeff.eval(y)));
        }
        CHECK(got == want);
    }
}
