#include <doctest.h>

#include <random>

#include "arcs/search.hpp"
#include "test_util.hpp"

using namespace arcs;
using namespace testutil;

namespace {

Point apply(const Field& F, const std::array<std::array<int, 3>, 3>& m, const Point& x) {
    std::array<Fe, 3> r;
    for (int i = 0; i < 3; ++i) {
        r[i] = F.zero();
        for (int j = 0; j < 3; ++j)
            r[i] = F.add(r[i], F.mul(F.from_int(m[i][j]), x.c[j]));
    }
    return normalize_point(F, r);
}

} // namespace

TEST_CASE("extensions lists exactly the points preserving the arc property") {
    Field F = Field::make(7, 1);
    Arc C = conic_arc(F);
    auto pts = C.sorted_points();
    pts.resize(5);
    Arc A = make_arc(F, pts);
    auto ext = extensions(A);
    for (const Point& x : all_points(F)) {
        if (A.contains(x)) continue;
        auto with = A.points();
        with.push_back(x);
        bool ok = std::holds_alternative<Arc>(Arc::validate(F, with));
        bool listed = std::binary_search(ext.begin(), ext.end(), x);
        CHECK(ok == listed);
    }
}

TEST_CASE("a conic arc over odd q is complete") {
    for (uint32_t q : {5u, 7u, 11u}) {
        Field F = Field::make(q, 1);
        CHECK(is_complete(conic_arc(F)));
    }
    // over even q the nucleus extends the conic
    Field E = Field::make(2, 3);
    CHECK(!is_complete(conic_arc(E)));
}

TEST_CASE("canonical form is invariant under projectivities") {
    Field F = Field::make(11, 1);
    auto [FF, A] = load_fixture("arc_q11_10.json");
    auto canon = canonical_form(A);
    // a handful of invertible integer matrices
    std::vector<std::array<std::array<int, 3>, 3>> mats{
        {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}},
        {{{1, 2, 0}, {0, 1, 0}, {3, 0, 1}}},
        {{{2, 0, 1}, {1, 1, 0}, {0, 5, 1}}},
        {{{1, 0, 0}, {4, 1, 0}, {0, 0, 3}}},
    };
    for (const auto& m : mats) {
        std::vector<Point> moved;
        for (const Point& x : A.points()) moved.push_back(apply(*FF, m, x));
        Arc B = make_arc(*FF, moved);
        CHECK(canonical_form(B) == canon);
    }
}

TEST_CASE("canonical form separates inequivalent arcs") {
    Field F = Field::make(7, 1);
    auto res = classify(F, 6, true);
    REQUIRE(res.count == 2);
    CHECK(!(res.representatives[0] == res.representatives[1]));
}

TEST_CASE("classification counts for complete arcs match the known census") {
    struct Row { uint32_t p, h; std::size_t size, want; };
    for (auto [p, h, size, want] : {Row{7, 1, 6, 2}, Row{3, 2, 8, 1}, Row{3, 2, 7, 1},
                                    Row{11, 1, 10, 1}, Row{11, 1, 9, 3}}) {
        Field F = Field::make(p, h);
        auto res = classify(F, size, true);
        CHECK(res.count == want);
    }
}

TEST_CASE("classification refuses q > 13 without the long-run flag") {
    Field F = Field::make(17, 1);
    CHECK_THROWS_AS(classify(F, 6, false), error);
}

TEST_CASE("kestenband arcs: size, completeness, and the two Hermitian forms") {
    for (auto [p, h] : {std::pair<uint32_t, uint32_t>{3, 2}, {5, 2}}) {
        Field F = Field::make(p, h);
        uint32_t q = F.q(), sq = p;
        auto K = kestenband(F);
        CHECK(K.arc.size() == q - sq + 1);
        CHECK(is_complete(K.arc));
        for (const Point& x : K.arc.points()) {
            CHECK(K.hermitian1.eval(x) == F.zero());
            CHECK(K.hermitian2.eval(x) == F.zero());
        }
        // Hermitian symmetry of the returned matrix
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(K.spec.H[i][j] == F.pow(K.spec.H[j][i], sq));
    }
}

TEST_CASE("kestenband rejects non-square and even q") {
    Field F = Field::make(7, 1);
    CHECK_THROWS_AS(kestenband(F), error);
    Field E = Field::make(2, 2);
    CHECK_THROWS_AS(kestenband(E), error);
}
