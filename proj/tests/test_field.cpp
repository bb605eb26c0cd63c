#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cic/errors.hpp"
#include "cic/field.hpp"
#include "cic/rng.hpp"
#include "oracles.hpp"

using namespace cic;

namespace {

SpectralField random_field(Rng& rng, int n) {
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) a[k] = rng.uniform(-1.0, 1.0);
  return SpectralField(std::move(a));
}

double rel_l2_diff(const SpectralField& f, const SpectralField& g) {
  return sobolev_norm(f - g, 0.0) / std::max(sobolev_norm(g, 0.0), 1e-300);
}

}  // namespace

TEST_CASE("synthesize hits known points") {
  // a_1 = 1 on a single-point grid: x_1 = pi/2, sin(pi/2) = 1.
  const GridSamples one = synthesize(SpectralField::single_mode(1, 1.0, 1), 1);
  CHECK(one.values[0] == doctest::Approx(1.0).epsilon(1e-15));

  // a_2 = 1 at x = pi/2: sin(pi) = 0. Grid M=3 has x_2 = pi/2.
  const GridSamples three = synthesize(SpectralField::single_mode(2, 1.0, 2), 3);
  CHECK(std::abs(three.values[1]) < 1e-15);
}

TEST_CASE("analyze/synthesize round trip") {
  Rng rng(42);
  for (int n : {4, 16, 33}) {
    const SpectralField f = random_field(rng, n);
    const SpectralField back = analyze(synthesize(f, 4 * n), n);
    CHECK(rel_l2_diff(back, f) < 1e-12);
  }
}

TEST_CASE("analyze picks out pure modes and rejects over-truncation") {
  GridSamples s;
  s.values.resize(16);
  for (int i = 0; i < 16; ++i) s.values[i] = std::sin(3.0 * s.x(i));
  const SpectralField f = analyze(s, 8);
  for (int k = 1; k <= 8; ++k) {
    CHECK(std::abs(f.coeff(k) - (k == 3 ? 1.0 : 0.0)) < 1e-12);
  }

  GridSamples zero;
  zero.values.assign(8, 0.0);
  const SpectralField z = analyze(zero, 8);
  CHECK(sobolev_norm(z, 0.0) == 0.0);

  CHECK_THROWS_AS(analyze(zero, 9), TruncationError);
}

TEST_CASE("analyze of a smooth profile matches continuous quadrature") {
  // u = x(pi - x); coefficients decay like 1/k^3, so a 512-point grid keeps
  // the aliasing error below the 1e-8 target.
  GridSamples s;
  s.values.resize(512);
  for (int i = 0; i < 512; ++i) s.values[i] = s.x(i) * (kPi - s.x(i));
  const SpectralField f = analyze(s, 8);
  for (int k = 1; k <= 8; ++k) {
    const double ref =
        oracle::sine_coefficient([](double x) { return x * (oracle::kPi - x); }, k);
    CHECK(std::abs(f.coeff(k) - ref) < 1e-8);
  }
}

TEST_CASE("sobolev norm follows the coefficient weights") {
  const SpectralField e1 = SpectralField::single_mode(1, 1.0, 4);
  CHECK(sobolev_norm(e1, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sobolev_norm(e1, 2.0) == doctest::Approx(2.0).epsilon(1e-15));

  const SpectralField two = SpectralField(std::vector<double>{1.0, 1.0});
  CHECK(sobolev_norm(two, 1.0) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-15));
}

TEST_CASE("Parseval at s = 0") {
  Rng rng(7);
  const SpectralField f = random_field(rng, 20);
  double sum = 0.0;
  for (int k = 1; k <= 20; ++k) sum += f.coeff(k) * f.coeff(k);
  CHECK(sobolev_norm(f, 0.0) * sobolev_norm(f, 0.0) ==
        doctest::Approx(sum).epsilon(1e-15));
}

TEST_CASE("cube of single modes matches the sin^3 identity") {
  // 4 sin^3(a) = 3 sin(a) - sin(3a)
  const SpectralField c1 = cube(SpectralField::single_mode(1, 1.0, 4));
  CHECK(c1.coeff(1) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(std::abs(c1.coeff(2)) < 1e-14);
  CHECK(c1.coeff(3) == doctest::Approx(-0.25).epsilon(1e-14));

  const SpectralField c2 = cube(SpectralField::single_mode(2, 1.0, 8));
  CHECK(c2.coeff(2) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(c2.coeff(6) == doctest::Approx(-0.25).epsilon(1e-14));
}

TEST_CASE("cube matches the quadrature oracle") {
  Rng rng(11);
  const int n = 16;
  const SpectralField f = random_field(rng, n);
  const SpectralField c = cube(f);
  std::vector<double> ref(n);
  for (int k = 1; k <= n; ++k) {
    ref[k - 1] = oracle::sine_coefficient(
        [&](double x) {
          const double u = oracle::eval_sine_series(f.coeffs(), x);
          return u * u * u;
        },
        k);
  }
  CHECK(rel_l2_diff(c, SpectralField(ref)) < 1e-10);
}

TEST_CASE("cube exactness up to N = 32") {
  Rng rng(12);
  const int n = 32;
  const SpectralField f = random_field(rng, n);
  const SpectralField c = cube(f);
  std::vector<double> ref(n);
  for (int k = 1; k <= n; ++k) {
    ref[k - 1] = oracle::sine_coefficient(
        [&](double x) {
          const double u = oracle::eval_sine_series(f.coeffs(), x);
          return u * u * u;
        },
        k, 1024);
  }
  CHECK(rel_l2_diff(c, SpectralField(ref)) < 1e-10);
}

TEST_CASE("cube tail energy is reported") {
  const CubeDiagnostics d = cube_with_tail(SpectralField::single_mode(1, 1.0, 1));
  CHECK(d.field.coeff(1) == doctest::Approx(0.75).epsilon(1e-14));
  // The discarded part is -sin(3x)/4: energy 1/16.
  CHECK(d.tail_energy == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("reflect flips even modes and is an involution") {
  const SpectralField e1 = SpectralField::single_mode(1, 1.0, 2);
  CHECK(reflect(e1).coeff(1) == 1.0);
  const SpectralField e2 = SpectralField::single_mode(2, 1.0, 2);
  CHECK(reflect(e2).coeff(2) == -1.0);

  Rng rng(3);
  const SpectralField f = random_field(rng, 17);
  const SpectralField rr = reflect(reflect(f));
  for (int k = 1; k <= 17; ++k) CHECK(rr.coeff(k) == f.coeff(k));
}

TEST_CASE("vertex projection keeps exactly the j*odd modes") {
  SpectralField f(std::vector<double>{0.0, 1.0, 1.0, 1.0, 0.0, 1.0});
  const SpectralField p2 = project_vertex(f, 2);
  CHECK(p2.coeff(2) == 1.0);
  CHECK(p2.coeff(3) == 0.0);
  CHECK(p2.coeff(4) == 0.0);  // 4 = 2*2, even multiple
  CHECK(p2.coeff(6) == 1.0);

  SpectralField g(std::vector<double>{1.0, 1.0, 1.0});
  const SpectralField p1 = project_vertex(g, 1);
  CHECK(p1.coeff(1) == 1.0);
  CHECK(p1.coeff(2) == 0.0);
  CHECK(p1.coeff(3) == 1.0);

  Rng rng(5);
  const SpectralField h = random_field(rng, 24);
  for (int j = 1; j <= 5; ++j) {
    const SpectralField once = project_vertex(h, j);
    const SpectralField twice = project_vertex(once, j);
    for (int k = 1; k <= 24; ++k) CHECK(twice.coeff(k) == once.coeff(k));
    // Contraction in every Sobolev norm.
    for (double s : {0.0, 1.0, 2.0}) {
      CHECK(sobolev_norm(once, s) <= sobolev_norm(h, s) * (1.0 + 1e-15));
    }
  }
}

TEST_CASE("vertex residual quantifies distance to X_j") {
  const SpectralField in_x2 = SpectralField::single_mode(2, 1.0, 8) +
                              SpectralField::single_mode(6, -0.25, 8);
  CHECK(vertex_residual(in_x2, 2) == 0.0);

  const SpectralField mixed = SpectralField(std::vector<double>{1.0, 1.0});
  CHECK(vertex_residual(mixed, 2) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  CHECK(vertex_residual(SpectralField::zero(4), 3) == 0.0);
}

TEST_CASE("cubing preserves vertex spaces") {
  Rng rng(9);
  const int n = 64;
  for (int j = 1; j <= 8; ++j) {
    for (int t = 0; t < 10; ++t) {
      std::vector<double> a(n, 0.0);
      for (int l = 1; j * l <= n; l += 2) a[j * l - 1] = rng.uniform(-1.0, 1.0);
      const SpectralField f{std::move(a)};
      CHECK(vertex_residual(cube(f), j) < 1e-10);
    }
  }
}

TEST_CASE("non-finite coefficients are rejected") {
  std::vector<double> bad{1.0, std::nan("")};
  CHECK_THROWS_AS(SpectralField{std::move(bad)}, std::invalid_argument);
}
