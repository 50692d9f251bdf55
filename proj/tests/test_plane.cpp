#include <doctest.h>

#include <random>
#include <set>

#include "arcs/plane.hpp"
#include "test_util.hpp"

using namespace arcs;
using namespace testutil;

TEST_CASE("all_points enumerates q^2+q+1 distinct normalized points") {
    for (auto [p, h] : {std::pair<uint32_t, uint32_t>{5, 1}, {3, 2}, {2, 3}}) {
        Field F = Field::make(p, h);
        auto pts = all_points(F);
        CHECK(pts.size() == F.q() * F.q() + F.q() + 1);
        std::set<Point> s(pts.begin(), pts.end());
        CHECK(s.size() == pts.size());
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        for (const Point& x : pts) CHECK(normalize_point(F, x.c) == x);
    }
}

TEST_CASE("line through two points is incident with both and has q+1 points") {
    Field F = Field::make(7, 1);
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Point a = random_point(F, rng), b = random_point(F, rng);
        if (a == b) continue;
        LinearForm l = line_through(F, a, b);
        CHECK(incident(F, l, a));
        CHECK(incident(F, l, b));
        auto on = points_on_line(F, l);
        CHECK(on.size() == F.q() + 1);
        for (const Point& x : on) CHECK(incident(F, l, x));
    }
}

TEST_CASE("det3 is zero exactly on collinear triples") {
    Field F = Field::make(5, 1);
    auto pts = all_points(F);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Point& a = pts[rng() % pts.size()];
        const Point& b = pts[rng() % pts.size()];
        const Point& c = pts[rng() % pts.size()];
        if (a == b || b == c || a == c) continue;
        bool collinear = incident(F, line_through(F, a, b), c);
        CHECK(F.is_zero(det3(F, a, b, c)) == collinear);
    }
}

TEST_CASE("arc validation reports collinear and duplicate witnesses") {
    Field F = Field::make(7, 1);
    auto pt = [&](int a, int b, int c) {
        return normalize_point(F, {F.from_int(a), F.from_int(b), F.from_int(c)});
    };
    auto ok = Arc::validate(F, {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)});
    CHECK(std::holds_alternative<Arc>(ok));

    auto col = Arc::validate(F, {pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)});
    REQUIRE(std::holds_alternative<ArcViolation>(col));
    auto w = std::get<CollinearWitness>(std::get<ArcViolation>(col));
    CHECK(w.i == 0);
    CHECK(w.j == 1);
    CHECK(w.k == 2);

    auto dup = Arc::validate(F, {pt(1, 0, 0), pt(2, 0, 0)});
    REQUIRE(std::holds_alternative<ArcViolation>(dup));
    CHECK(std::holds_alternative<DuplicateWitness>(std::get<ArcViolation>(dup)));
}

TEST_CASE("conic arc has q+1 points and deficiency 1") {
    for (auto [p, h] : {std::pair<uint32_t, uint32_t>{5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
        Field F = Field::make(p, h);
        Arc C = conic_arc(F);
        CHECK(C.size() == F.q() + 1);
        CHECK(C.t() == 1);
    }
}

TEST_CASE("each arc point lies on exactly t tangents") {
    Field F = Field::make(3, 2);
    for (int k : {0, 1, 2, 3}) {
        Arc A = conic_minus(F, k);
        for (const Point& a : A.points()) {
            auto tans = tangent_lines(A, a);
            CHECK(tans.size() == A.t());
            for (const LinearForm& l : tans) {
                CHECK(incident(F, l, a));
                int hits = 0;
                for (const Point& b : A.points())
                    if (incident(F, l, b)) ++hits;
                CHECK(hits == 1);
            }
        }
    }
}
