#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "polyann/extension.hpp"
#include "polyann/fundamental.hpp"
#include "polyann/harmonics.hpp"
#include "polyann/models.hpp"
#include "polyann/smooth.hpp"
#include "polyann/taylor.hpp"
#include "polyann/witness.hpp"

namespace {

using namespace polyann;

const std::vector<cplx> kPrefix = {0.0, 1.0, 3.0, 7.0, 15.0};

AnnularModel bench_model() {
  return AnnularModel::harmonic(
      3, 0.5, 2.0, {{0, 1, 0.3, 0.2}, {1, 2, 1.0, 0.4}, {2, 3, 0.25, 0.1}},
      0.0);
}

void BM_FundamentalCoeffs(benchmark::State& state) {
  const auto seq = exponent_sequence_for(2, 3);
  const auto lambda = seq.prefix(15);
  const std::size_t K = std::size_t(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fundamental_taylor_coeffs(lambda, K));
  }
}
BENCHMARK(BM_FundamentalCoeffs)->Arg(16)->Arg(64);

void BM_FundamentalEvalSeries(benchmark::State& state) {
  const FundamentalFunction phi(kPrefix);
  const cplx z(1.5, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(phi.eval_series(z));
}
BENCHMARK(BM_FundamentalEvalSeries);

void BM_FundamentalEvalContour(benchmark::State& state) {
  const FundamentalFunction phi(kPrefix);
  const cplx z(1.5, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(phi.eval_contour(z));
}
BENCHMARK(BM_FundamentalEvalContour);

void BM_FundamentalEvalClosed(benchmark::State& state) {
  const FundamentalFunction phi(kPrefix);
  const cplx z(1.5, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(phi.eval_closed_formula(z));
}
BENCHMARK(BM_FundamentalEvalClosed);

void BM_TaylorExpand(benchmark::State& state) {
  const ExpSum f = ExpSum::exponential(1.0);
  const auto seq = ExponentSequence::shifted_integers();
  const std::size_t N = std::size_t(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(taylor_expand(f, seq, 0.0, N));
  }
}
BENCHMARK(BM_TaylorExpand)->Arg(20)->Arg(40);

void BM_SphericalCoefficient(benchmark::State& state) {
  const auto m = bench_model();
  const SphericalContext ctx(3, 12);
  const RadialFunction f = [&m](const Vec3& x) { return m.eval(x); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(flc(ctx, f, 2, 3, 1.2, m.r0(), m.r1()));
  }
}
BENCHMARK(BM_SphericalCoefficient);

void BM_LogJet(benchmark::State& state) {
  const auto m = bench_model();
  const std::size_t N = std::size_t(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_jet(m, 1, 2, 0.0, N));
  }
}
BENCHMARK(BM_LogJet)->Arg(16)->Arg(40);

void BM_ExtensionBuild(benchmark::State& state) {
  const auto m = bench_model();
  const int K_max = int(state.range(0));
  for (auto _ : state) {
    AnnularExtension ext(m, K_max, 16, 32);
    benchmark::DoNotOptimize(ext.r_out());
  }
}
BENCHMARK(BM_ExtensionBuild)->Arg(4)->Arg(8);

void BM_ExtensionEval(benchmark::State& state) {
  const auto m = bench_model();
  const AnnularExtension ext(m, 8, 16, 32);
  const CVec3 z{cplx(1.1, 0.08), cplx(0.3, 0.0), cplx(0.0, 0.0)};
  for (auto _ : state) benchmark::DoNotOptimize(ext.eval(z));
}
BENCHMARK(BM_ExtensionEval);

void BM_WitnessRolle(benchmark::State& state) {
  constexpr double pi = std::numbers::pi;
  const TestFunction f{
      [](double x) { return std::sin(pi * x) * std::exp(0.7 * x); },
      [](double x) {
        return (pi * std::cos(pi * x) + 0.7 * std::sin(pi * x)) *
               std::exp(0.7 * x);
      },
      {}};
  for (auto _ : state) benchmark::DoNotOptimize(rolle_point(f, 0.7, 0.0, 1.0));
}
BENCHMARK(BM_WitnessRolle);

}  // namespace

BENCHMARK_MAIN();
