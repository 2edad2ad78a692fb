#include <benchmark/benchmark.h>

#include "lsharp/gamma/transforms.hpp"
#include "lsharp/hfun/structural.hpp"
#include "lsharp/lfun/coeffs.hpp"
#include "lsharp/lfun/twist.hpp"
#include "lsharp/lfun/zeta.hpp"
#include "lsharp/numkern/special.hpp"
#include "lsharp/periodfn/period.hpp"

using namespace lsharp;

static void BM_TwistDivisor(benchmark::State& state) {
  const auto src = CoefficientSource::divisor_d2();
  const double X = static_cast<double>(state.range(0));
  TwistOptions opt;
  opt.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smoothed_twist(src, BigFloat(2), X, opt));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(twist_cutoff(X)));
}
BENCHMARK(BM_TwistDivisor)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_RamanujanTau(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ramanujan_tau(state.range(0)));
}
BENCHMARK(BM_RamanujanTau)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_ZetaEM(benchmark::State& state) {
  PrecisionScope ps(state.range(0));
  const BigComplex s(0.5, 14.0);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_em(s));
}
BENCHMARK(BM_ZetaEM)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_LogGamma(benchmark::State& state) {
  PrecisionScope ps(state.range(0));
  const BigComplex z(3.25, -7.5);
  for (auto _ : state) benchmark::DoNotOptimize(log_gamma(z));
}
BENCHMARK(BM_LogGamma)->Arg(256)->Arg(1024);

static void BM_StructuralSymbolic(benchmark::State& state) {
  const GammaFactor g = virtual_gamma(HeckeKind{Scalar(mpq_class(11, 2))});
  for (auto _ : state) benchmark::DoNotOptimize(structural_symbolic(g, state.range(0)));
}
BENCHMARK(BM_StructuralSymbolic)->DenseRange(2, 8, 3);

static void BM_PsiDelta(benchmark::State& state) {
  PrecisionScope ps(256);
  const auto f = FourierSeries::holomorphic(CoefficientSource::eta_power24());
  for (auto _ : state) benchmark::DoNotOptimize(psi_eval(f, BigComplex(0.3, 1.1)));
}
BENCHMARK(BM_PsiDelta)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
