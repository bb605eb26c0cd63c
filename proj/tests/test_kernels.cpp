#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cic/kernels.hpp"
#include "cic/rng.hpp"

using namespace cic;
using namespace cic::kernels;

namespace {

std::vector<double> random_vector(Rng& rng, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return v;
}

}  // namespace

TEST_CASE("parallel kernels are bitwise identical to the serial reference") {
  Rng rng(1234);
  for (auto [m, n] : {std::pair{64, 16}, {256, 64}, {1024, 192}, {3072, 192}}) {
    const SineTransformPlan plan(m, n);
    const std::vector<double> a = random_vector(rng, n);
    std::vector<double> vs(m), vp(m);
    plan.synthesize_serial(a, vs);
    plan.synthesize_parallel(a, vp);
    for (int i = 0; i < m; ++i) CHECK(vs[i] == vp[i]);

    const std::vector<double> v = random_vector(rng, m);
    std::vector<double> as(n), ap(n);
    plan.analyze_serial(v, as);
    plan.analyze_parallel(v, ap);
    for (int k = 0; k < n; ++k) CHECK(as[k] == ap[k]);

    const CosineAnalysisPlan cplan(m, 2 * n);
    std::vector<double> cs(2 * n + 1), cp(2 * n + 1);
    cplan.analyze_serial(v, cs);
    cplan.analyze_parallel(v, cp);
    for (int p = 0; p <= 2 * n; ++p) CHECK(cs[p] == cp[p]);

    std::vector<double> qs(m), qp(m);
    pointwise_cube_serial(v, qs);
    pointwise_cube_parallel(v, qp);
    for (int i = 0; i < m; ++i) CHECK(qs[i] == qp[i]);
  }
}

TEST_CASE("sine table matches direct evaluation") {
  const int m = 33, n = 12;
  const SineTransformPlan plan(m, n);
  Rng rng(99);
  const std::vector<double> a = random_vector(rng, n);
  std::vector<double> v(m);
  plan.synthesize(a, v);
  for (int i = 0; i < m; ++i) {
    const double x = (i + 1) * std::numbers::pi / (m + 1);
    double ref = 0.0;
    for (int k = 0; k < n; ++k) ref += a[k] * std::sin((k + 1) * x);
    CHECK(v[i] == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("discrete sine orthogonality: analyze inverts synthesize") {
  const int m = 48, n = 48;
  const SineTransformPlan plan(m, n);
  Rng rng(5);
  const std::vector<double> a = random_vector(rng, n);
  std::vector<double> v(m), back(n);
  plan.synthesize(a, v);
  plan.analyze(v, back);
  for (int k = 0; k < n; ++k) CHECK(back[k] == doctest::Approx(a[k]).epsilon(1e-12));
}

TEST_CASE("cosine analysis recovers the coefficients of an even polynomial") {
  // w(x) = sin(x)^2 = 1/2 - cos(2x)/2, which vanishes at both endpoints.
  const int m = 64;
  std::vector<double> w(m);
  for (int i = 0; i < m; ++i) {
    const double x = (i + 1) * std::numbers::pi / (m + 1);
    w[i] = std::sin(x) * std::sin(x);
  }
  const CosineAnalysisPlan plan(m, 8);
  std::vector<double> c(9);
  plan.analyze(w, c);
  CHECK(c[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(c[2] == doctest::Approx(-0.5).epsilon(1e-13));
  for (int p : {1, 3, 4, 5, 6, 7, 8}) CHECK(std::abs(c[p]) < 1e-13);
}
