// Serial-reference vs OpenMP comparison for the transform kernels, plus the
// assembled hot paths (cube nonlinearity, one ETD step).

#include <benchmark/benchmark.h>

#include <vector>

#include "cic/control.hpp"
#include "cic/field.hpp"
#include "cic/kernels.hpp"
#include "cic/rng.hpp"
#include "cic/timestepping.hpp"

using namespace cic;
using namespace cic::kernels;

namespace {

std::vector<double> random_vector(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

void bm_synthesize_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = 4 * n;
  const SineTransformPlan plan(m, n);
  const std::vector<double> a = random_vector(n, 1);
  std::vector<double> v(static_cast<std::size_t>(m));
  for (auto _ : state) {
    plan.synthesize_serial(a, v);
    benchmark::DoNotOptimize(v.data());
  }
}

void bm_synthesize_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = 4 * n;
  const SineTransformPlan plan(m, n);
  const std::vector<double> a = random_vector(n, 1);
  std::vector<double> v(static_cast<std::size_t>(m));
  for (auto _ : state) {
    plan.synthesize_parallel(a, v);
    benchmark::DoNotOptimize(v.data());
  }
}

void bm_analyze_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = 4 * n;
  const SineTransformPlan plan(m, n);
  const std::vector<double> v = random_vector(m, 2);
  std::vector<double> a(static_cast<std::size_t>(n));
  for (auto _ : state) {
    plan.analyze_serial(v, a);
    benchmark::DoNotOptimize(a.data());
  }
}

void bm_analyze_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = 4 * n;
  const SineTransformPlan plan(m, n);
  const std::vector<double> v = random_vector(m, 2);
  std::vector<double> a(static_cast<std::size_t>(n));
  for (auto _ : state) {
    plan.analyze_parallel(v, a);
    benchmark::DoNotOptimize(a.data());
  }
}

void bm_cube(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpectralField f{random_vector(n, 3)};
  for (auto _ : state) {
    const SpectralField c = cube(f);
    benchmark::DoNotOptimize(c.coeffs().data());
  }
}

void bm_etd_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ControlParams p;
  p.gain = -2.0;
  p.kernel = theorem_kernel(4.5, n);
  const EtdStepper stepper(n, 4.5, p, 1e-3);
  SpectralField u{random_vector(n, 4)};
  u = 0.1 * u;
  for (auto _ : state) {
    u = stepper.advance(u);
    benchmark::DoNotOptimize(u.coeffs().data());
  }
}

}  // namespace

BENCHMARK(bm_synthesize_serial)->Arg(64)->Arg(192)->Arg(512)->Arg(1024);
BENCHMARK(bm_synthesize_parallel)->Arg(64)->Arg(192)->Arg(512)->Arg(1024);
BENCHMARK(bm_analyze_serial)->Arg(64)->Arg(192)->Arg(512)->Arg(1024);
BENCHMARK(bm_analyze_parallel)->Arg(64)->Arg(192)->Arg(512)->Arg(1024);
BENCHMARK(bm_cube)->Arg(64)->Arg(192)->Arg(512);
BENCHMARK(bm_etd_step)->Arg(64)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
