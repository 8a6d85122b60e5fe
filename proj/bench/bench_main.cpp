// Serial reference kernels against their OpenMP counterparts.
//
//   ./build/bench/gk_bench --benchmark_filter=Enumerate

#include <benchmark/benchmark.h>

#include <random>

#include "gk/aut.hpp"
#include "gk/curve.hpp"
#include "gk/numsg.hpp"

namespace {

using namespace gk;

const TowerField& tower(std::int64_t n) {
    static const TowerField f2(2, 1), f3(3, 1), f4(2, 2);
    return n == 2 ? f2 : n == 3 ? f3 : f4;
}

void BM_EnumerateParallel(benchmark::State& st) {
    const auto& f = tower(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_points(f, f.size()));
}
BENCHMARK(BM_EnumerateParallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateSerial(benchmark::State& st) {
    const auto& f = tower(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(serial::enumerate_points(f));
}
BENCHMARK(BM_EnumerateSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

std::vector<Collineation> generators(const TowerField& f) {
    auto g = su3_generators(f);
    const auto c = cyclic_generators(f);
    g.insert(g.end(), c.begin(), c.end());
    if (auto e = extra_generator(f)) g.push_back(*e);
    return g;
}

void BM_ClosureParallel(benchmark::State& st) {
    const auto& f = tower(st.range(0));
    const auto g = generators(f);
    for (auto _ : st) benchmark::DoNotOptimize(group_closure(f, g).order());
}
BENCHMARK(BM_ClosureParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ClosureSerial(benchmark::State& st) {
    const auto& f = tower(st.range(0));
    const auto g = generators(f);
    for (auto _ : st) benchmark::DoNotOptimize(serial::group_closure(f, g).order());
}
BENCHMARK(BM_ClosureSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

std::vector<std::vector<FieldElem>> random_rows(const TowerField& f, std::size_t rows, std::size_t cols) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(f.size() - 1));
    std::vector<std::vector<FieldElem>> m(rows, std::vector<FieldElem>(cols));
    for (auto& r : m)
        for (auto& e : r) e = FieldElem{pick(rng)};
    return m;
}

void BM_RankIncremental(benchmark::State& st) {
    const auto& f = tower(4);
    const auto m = random_rows(f, static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(1)));
    for (auto _ : st) {
        IncrementalRank r(f, m.front().size());
        for (const auto& row : m) r.insert(row);
        benchmark::DoNotOptimize(r.rank());
    }
}
BENCHMARK(BM_RankIncremental)->Args({64, 4096})->Args({128, 16384})->Unit(benchmark::kMillisecond);

void BM_RankSerial(benchmark::State& st) {
    const auto& f = tower(4);
    const auto m = random_rows(f, static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(serial::matrix_rank(f, m));
}
BENCHMARK(BM_RankSerial)->Args({64, 4096})->Args({128, 16384})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
