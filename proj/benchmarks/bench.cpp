#include <benchmark/benchmark.h>

#include "fiboper/families.hpp"
#include "fiboper/series.hpp"
#include "fiboper/spectral.hpp"
#include "fiboper/tables.hpp"

namespace {

using namespace fiboper;

void BM_FibonomialRow(benchmark::State& state) {
  PsiSequence f = PsiSequence::fibonacci();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Integer acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += f.binomial(n, k);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FibonomialRow)->Arg(30)->Arg(60)->Arg(120);

void BM_SeriesMul(benchmark::State& state) {
  PsiSequence f = PsiSequence::fibonacci();
  const std::size_t trunc = static_cast<std::size_t>(state.range(0));
  OperatorSeries a = forward_difference_op(f, trunc);
  OperatorSeries b = bernoulli_s_op(f, trunc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(32)->Arg(64);

void BM_SeriesInverse(benchmark::State& state) {
  PsiSequence f = PsiSequence::fibonacci();
  const std::size_t trunc = static_cast<std::size_t>(state.range(0));
  OperatorSeries s = hermite_s_op(f, parse_rational("3/2"), trunc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.inverse());
  }
}
BENCHMARK(BM_SeriesInverse)->Arg(16)->Arg(32)->Arg(64);

void BM_CompositionalInverse(benchmark::State& state) {
  PsiSequence f = PsiSequence::fibonacci();
  const std::size_t trunc = static_cast<std::size_t>(state.range(0));
  OperatorSeries q = abel_op(f, Rational(1), trunc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(q.compositional_inverse());
  }
}
BENCHMARK(BM_CompositionalInverse)->Arg(8)->Arg(16);

void BM_BasicSequence(benchmark::State& state) {
  PsiSequence f = PsiSequence::fibonacci();
  const std::size_t n_max = static_cast<std::size_t>(state.range(0));
  ShefferScheme scheme = ShefferScheme::basic(forward_difference_op(f, n_max + 2), "bench");
  for (auto _ : state) {
    benchmark::DoNotOptimize(basic_sequence(scheme, n_max));
  }
}
BENCHMARK(BM_BasicSequence)->Arg(8)->Arg(16)->Arg(24);

void BM_GramMatrix(benchmark::State& state) {
  PsiSequence f = PsiSequence::fibonacci();
  const std::size_t n_max = static_cast<std::size_t>(state.range(0));
  ShefferScheme scheme = FamilySpec::parse("sheffer:bernoulli").scheme(f, 2 * n_max + 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_matrix(scheme, n_max));
  }
}
BENCHMARK(BM_GramMatrix)->Arg(4)->Arg(6);

void BM_Verify(benchmark::State& state) {
  PsiSequence f = PsiSequence::fibonacci();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_verify(f));
  }
}
BENCHMARK(BM_Verify);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
