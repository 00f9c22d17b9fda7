#include <benchmark/benchmark.h>

#include <random>

#include "jqd/geodesy.hpp"
#include "jqd/jacobi.hpp"
#include "jqd/qdclass.hpp"
#include "jqd/roots.hpp"
#include "jqd/tracer.hpp"

using namespace jqd;

static void BM_JacobiPoly(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(jacobi_poly({n, cx(0.7, -0.3), cx(1.2, 0.4)}));
}
BENCHMARK(BM_JacobiPoly)->Arg(10)->Arg(40)->Arg(100);

static void BM_FindRoots(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    auto p = jacobi_poly({n, cx(0.7, -0.3), cx(1.2, 0.4)});
    for (auto _ : st) benchmark::DoNotOptimize(find_roots(p));
}
BENCHMARK(BM_FindRoots)->Arg(10)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Evaluate(benchmark::State& st) {
    auto hi = jacobi_poly({40, cx(0.7, -0.3), cx(1.2, 0.4)});
    ComplexPolynomial plain(hi.coeffs());
    const auto& p = st.range(0) ? hi : plain;
    cx z(0.3, 0.2);
    for (auto _ : st) benchmark::DoNotOptimize(p(z));
}
BENCHMARK(BM_Evaluate)->Arg(0)->Arg(1);

static void BM_Classify(benchmark::State& st) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-3, 3);
    std::vector<NormalizedQD> qs;
    for (int k = 0; k < 256; ++k) qs.push_back({cx(U(rng), U(rng)), cx(U(rng), U(rng))});
    std::size_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(classify(qs[i++ % qs.size()]));
}
BENCHMARK(BM_Classify);

static void BM_Inventory(benchmark::State& st) {
    NormalizedQD qd{cx(0, 2), cx(-0.5, 0.5)};
    for (auto _ : st) benchmark::DoNotOptimize(geodesic_inventory(qd));
}
BENCHMARK(BM_Inventory)->Unit(benchmark::kMicrosecond);

static void BM_TraceCritical(benchmark::State& st) {
    NormalizedQD qd{cx(0, 2), cx(-0.5, 0.5)};
    for (auto _ : st) benchmark::DoNotOptimize(trace_critical(qd));
}
BENCHMARK(BM_TraceCritical)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
