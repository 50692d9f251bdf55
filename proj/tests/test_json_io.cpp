#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace arcs;
using namespace testutil;

TEST_CASE("field element wire form round trip, including extension fields") {
    Field F = Field::make(3, 2);
    for (uint32_t a = 0; a < F.q(); ++a) {
        json j = fe_to_json(F, Fe{a});
        CHECK(j.is_array());
        CHECK(j.size() == 2);
        CHECK(fe_from_json(F, j) == Fe{a});
    }
    // bare-integer shorthand
    CHECK(fe_from_json(F, json(2)) == F.from_int(2));
}

TEST_CASE("arc documents round trip and points normalize on load") {
    auto [F, A] = load_fixture("arc_q13_12.json");
    json j = arc_to_json(A);
    auto F2 = field_from_json(j);
    CHECK(F2->same_as(*F));
    auto pts = points_from_json(*F2, j);
    CHECK(pts == A.points());

    // unnormalized input: scale a point by 2
    json j2 = j;
    for (auto& c : j2["points"][0])
        c[0] = (c[0].get<int>() * 2) % 13;
    auto pts2 = points_from_json(*F2, j2);
    CHECK(pts2[0] == A.points()[0]);
}

TEST_CASE("polynomial JSON round trip preserves terms and order") {
    Field F = Field::make(7, 1);
    std::mt19937 rng(31);
    HomPoly f = random_nonzero_poly(F, 4, rng);
    json j = hompoly_to_json(f);
    CHECK(j["degree"] == 4);
    // terms sorted ascending graded-lex
    CHECK(hompoly_from_json(F, j) == f);
}

TEST_CASE("ttform JSON round trip") {
    Field F = Field::make(5, 1);
    std::mt19937 rng(32);
    BiPoly P(F, 2, 2);
    for (const Mono& mx : monomials_of_degree(2))
        for (const Mono& my : monomials_of_degree(2))
            P.set_coeff({mx, my}, random_fe(F, rng));
    json j = ttform_to_json(P);
    BiPoly Q = ttform_from_json(F, j);
    CHECK(Q.terms() == P.terms());
}

TEST_CASE("file IO errors carry the io_error code") {
    try {
        read_json_file(fixture_path("does_not_exist.json"));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::io_error);
    }
}
