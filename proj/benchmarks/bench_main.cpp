#include <benchmark/benchmark.h>

#include "skein/pts.hpp"
#include "skein/reps.hpp"

using namespace skein;

namespace {

void BM_ReduceWord(benchmark::State& state) {
  const auto sys = make_presentation(PresentationId::RY022_3GEN);
  // g^n a^n b^n is as far from normal form as words of its length get.
  Word w;
  const auto n = static_cast<std::size_t>(state.range(0));
  w.append(n, *sys.alphabet().find("g"));
  w.append(n, *sys.alphabet().find("a"));
  w.append(n, *sys.alphabet().find("b"));
  for (auto _ : state) benchmark::DoNotOptimize(sys.reduce_word(w));
}
BENCHMARK(BM_ReduceWord)->DenseRange(1, 4);

void BM_Confluence(benchmark::State& state) {
  const auto sys = make_presentation(PresentationId::RY022_4GEN);
  for (auto _ : state) benchmark::DoNotOptimize(check_local_confluence(sys));
}
BENCHMARK(BM_Confluence)->Unit(benchmark::kMillisecond);

// Fresh caches each iteration, so this times realization and expansion.
void BM_CurveProduct(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Curves cv;
    benchmark::DoNotOptimize(cv.product({1, 0}, {p, 2}));
  }
}
BENCHMARK(BM_CurveProduct)->DenseRange(1, 7, 2)->Unit(benchmark::kMillisecond);

void BM_Recursion(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Curves cv;
    const Discrepancies D(cv);
    benchmark::DoNotOptimize(D.recursion(p, 1));
  }
}
BENCHMARK(BM_Recursion)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_BuildAndVerify(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto s = sample_shadow(N, 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_rep(build_rep(s), s));
}
BENCHMARK(BM_BuildAndVerify)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

void BM_Equivalence(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto s = sample_shadow(N, 1);
  const auto a = build_rep(s), b = build_rep(with_inverse_x(s));
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(a, b));
}
BENCHMARK(BM_Equivalence)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
