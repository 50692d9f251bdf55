#include <benchmark/benchmark.h>

#include "arcs/curvefinder.hpp"
#include "arcs/dualcurve.hpp"
#include "arcs/search.hpp"
#include "arcs/tangents.hpp"
#include "arcs/ttform.hpp"

using namespace arcs;

namespace {

Arc conic_minus(const Field& F, int k) {
    Arc C = conic_arc(F);
    auto pts = C.sorted_points();
    pts.erase(pts.begin(), pts.begin() + k);
    return make_arc(F, pts);
}

void BM_FieldTables(benchmark::State& state) {
    for (auto _ : state) {
        Field F = Field::make(3, (uint32_t)state.range(0));
        benchmark::DoNotOptimize(F.q());
    }
}
BENCHMARK(BM_FieldTables)->Arg(2)->Arg(3)->Arg(4);

void BM_TangentSystem(benchmark::State& state) {
    Field F = Field::make((uint32_t)state.range(0), 1);
    Arc A = conic_minus(F, 3);
    for (auto _ : state) {
        auto sys = build_tangent_system(A);
        benchmark::DoNotOptimize(sys.base());
    }
}
BENCHMARK(BM_TangentSystem)->Arg(13)->Arg(29);

void BM_DualCurve(benchmark::State& state) {
    Field F = Field::make((uint32_t)state.range(0), 1);
    Arc A = conic_minus(F, 3);
    auto sys = build_tangent_system(A);
    for (auto _ : state) {
        auto D = build_dual_curve(sys);
        benchmark::DoNotOptimize(D.m);
    }
}
BENCHMARK(BM_DualCurve)->Arg(13)->Arg(29);

void BM_BuildF(benchmark::State& state) {
    Field F = Field::make((uint32_t)state.range(0), 1);
    Arc A = conic_minus(F, 3);
    auto sys = build_tangent_system(A);
    for (auto _ : state) {
        BiPoly Ft = build_F(A, sys);
        benchmark::DoNotOptimize(Ft.term_count());
    }
}
BENCHMARK(BM_BuildF)->Arg(11)->Arg(13)->Arg(29);

void BM_TrivariateGcd(benchmark::State& state) {
    Field F = Field::make(13, 1);
    HomPoly a(F, 1), b(F, 1), g(F, 2);
    a.set_coeff({1, 0, 0}, F.one());
    a.set_coeff({0, 1, 0}, F.from_int(3));
    b.set_coeff({0, 1, 0}, F.one());
    b.set_coeff({0, 0, 1}, F.from_int(5));
    g.set_coeff({2, 0, 0}, F.one());
    g.set_coeff({0, 2, 0}, F.from_int(2));
    g.set_coeff({0, 0, 2}, F.from_int(7));
    HomPoly f1 = g.mul(a).mul(a).mul(b);
    HomPoly f2 = g.mul(a).mul(b).mul(b);
    for (auto _ : state) {
        HomPoly d = trivariate_gcd(f1, f2);
        benchmark::DoNotOptimize(d.degree());
    }
}
BENCHMARK(BM_TrivariateGcd);

void BM_Classify(benchmark::State& state) {
    Field F = Field::make((uint32_t)state.range(0), 1);
    for (auto _ : state) {
        auto res = classify(F, F.q() - 1, true);
        benchmark::DoNotOptimize(res.count);
    }
}
BENCHMARK(BM_Classify)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& state) {
    Field F = Field::make(13, 1);
    auto pt = [&](int a, int b, int c) {
        return normalize_point(F, {F.from_int(a), F.from_int(b), F.from_int(c)});
    };
    std::vector<Point> pts;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            pts.push_back(pt(3 * s1, 4 * s2, 1));
            pts.push_back(pt(4 * s1, 3 * s2, 1));
            pts.push_back(pt(s1, s2, 1));
        }
    Arc A = make_arc(F, pts);
    for (auto _ : state) {
        auto res = coprime_certificate(A);
        benchmark::DoNotOptimize(res.index());
    }
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
