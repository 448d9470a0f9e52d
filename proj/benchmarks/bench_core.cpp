#include <benchmark/benchmark.h>

#include "alcove/concave.hpp"
#include "alcove/series.hpp"

using namespace alcove;

static void bm_root_generation(benchmark::State& state) {
    DynkinType t{'E', static_cast<int>(state.range(0))};
    for (auto _ : state) {
        RootSystem rs(t);
        benchmark::DoNotOptimize(rs.roots().size());
    }
}
BENCHMARK(bm_root_generation)->Arg(6)->Arg(7)->Arg(8);

static void bm_classify_g2(benchmark::State& state) {
    ConcaveTuple fs;
    fs.entries.push_back(from_point({{'G', 2}, {Rat(1, 9), Rat(0)}}));
    fs.entries.push_back(from_point({{'G', 2}, {Rat(0), Rat(1, 6)}}));
    ConcaveMap m = combine(fs, {1, 2});
    for (auto _ : state) {
        TypeWitness w = classify(m);
        benchmark::DoNotOptimize(w.type);
    }
}
BENCHMARK(bm_classify_g2);

static void bm_regularize(benchmark::State& state) {
    DynkinType t = state.range(0) == 0 ? DynkinType{'G', 2} : DynkinType{'B', 3};
    ConcaveTuple fs;
    auto verts = alcove_vertices(t);
    for (const auto& v : verts) fs.entries.push_back(from_point(v));
    std::vector<int> all;
    for (size_t i = 1; i <= fs.entries.size(); ++i) all.push_back(static_cast<int>(i));
    ConcaveMap m = combine(fs, all);
    for (auto _ : state) {
        ConcaveMap f = regularize(m);
        benchmark::DoNotOptimize(f.values.size());
    }
}
BENCHMARK(bm_regularize)->Arg(0)->Arg(1);

static void bm_series_multiply(benchmark::State& state) {
    ConcaveTuple fs;
    for (int k = 0; k < 3; ++k)
        fs.entries.push_back(from_point({{'A', 2}, {Rat(1, 3), Rat(1, 3)}}));
    ValuationPattern pat = pattern(fs);
    TruncatedLaurentMatrix a = sample_member(pat, 11, 4, 4, 6);
    TruncatedLaurentMatrix b = sample_member(pat, 12, 4, 4, 6);
    for (auto _ : state) {
        TruncatedLaurentMatrix c = multiply(a, b);
        benchmark::DoNotOptimize(c.m);
    }
}
BENCHMARK(bm_series_multiply);

BENCHMARK_MAIN();
