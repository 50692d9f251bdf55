#include <doctest.h>

#include "arcs/dualcurve.hpp"
#include "test_util.hpp"

using namespace arcs;
using namespace testutil;

TEST_CASE("dual curve degree is mt and G specializes to the tangent forms") {
    for (uint32_t q : {7u, 8u, 9u, 11u}) {
        uint32_t p = q, h = 1;
        if (q == 8) p = 2, h = 3;
        if (q == 9) p = 3, h = 2;
        Field F = Field::make(p, h);
        // conic minus k has t = k+1; keep |A| >= mt+2
        int k = q >= 9 ? 2 : 1;
        Arc A = conic_minus(F, k);
        auto sys = build_tangent_system(A);
        auto D = build_dual_curve(sys);
        CHECK(D.m == (q % 2 == 1 ? 2 : 1));
        CHECK(D.phi.degree() == D.m * (int)A.t());
        auto rep = verify_dual(sys, D);
        CHECK(rep.pass);
    }
}

TEST_CASE("phi vanishes at the dual coordinates of every tangent") {
    Field F = Field::make(11, 1);
    Arc A = conic_minus(F, 2); // size 10 >= 2t+2 = 8
    auto sys = build_tangent_system(A);
    auto D = build_dual_curve(sys);
    for (const Point& a : A.points())
        for (const LinearForm& l : sys.factors_at(a))
            CHECK(D.phi.eval(std::array<Fe, 3>{l.c[0], l.c[1], l.c[2]}) == F.zero());
}

TEST_CASE("dual curve verifies on the stored sporadic arcs") {
    for (const char* name : {"arc_q11_10.json", "arc_q13_12.json", "arc_q17_14.json",
                             "arc_q29_24.json"}) {
        auto [F, A] = load_fixture(name);
        auto sys = build_tangent_system(A);
        auto D = build_dual_curve(sys);
        CHECK(verify_dual(sys, D).pass);
    }
}

TEST_CASE("arcs below the interpolation threshold are rejected") {
    Field F = Field::make(11, 1);
    // size 5, t = 8, needs mt+2 = 18 points
    Arc C = conic_arc(F);
    auto pts = C.sorted_points();
    pts.resize(5);
    Arc A = make_arc(F, pts);
    CHECK_THROWS_AS(build_dual_curve(build_tangent_system(A)), error);
}
