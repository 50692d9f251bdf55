#pragma once

#include <random>
#include <string>

#include "arcs/json_io.hpp"

namespace testutil {

using namespace arcs;

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

struct LoadedArc {
    std::shared_ptr<Field> field;
    Arc arc;
};

inline LoadedArc load_fixture(const std::string& name) {
    json j = read_json_file(fixture_path(name));
    auto F = field_from_json(j);
    Arc A = make_arc(*F, points_from_json(*F, j));
    return {F, std::move(A)};
}

/// Conic arc with the first k points removed (canonical order).
inline Arc conic_minus(const Field& F, int k) {
    Arc C = conic_arc(F);
    auto pts = C.sorted_points();
    pts.erase(pts.begin(), pts.begin() + k);
    return make_arc(F, pts);
}

inline Fe random_fe(const Field& F, std::mt19937& rng) {
    return Fe{(uint32_t)(rng() % F.q())};
}

inline Fe random_nonzero(const Field& F, std::mt19937& rng) {
    return Fe{(uint32_t)(rng() % (F.q() - 1)) + 1};
}

inline Point random_point(const Field& F, std::mt19937& rng) {
    while (true) {
        std::array<Fe, 3> c{random_fe(F, rng), random_fe(F, rng), random_fe(F, rng)};
        if (c[0].v || c[1].v || c[2].v) return normalize_point(F, c);
    }
}

inline HomPoly random_poly(const Field& F, int degree, std::mt19937& rng) {
    HomPoly f(F, degree);
    for (const Mono& m : monomials_of_degree(degree)) f.set_coeff(m, random_fe(F, rng));
    return f;
}

inline HomPoly random_nonzero_poly(const Field& F, int degree, std::mt19937& rng) {
    while (true) {
        HomPoly f = random_poly(F, degree, rng);
        if (!f.is_zero()) return f;
    }
}

} // namespace testutil
