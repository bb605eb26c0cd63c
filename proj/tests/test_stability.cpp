#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cic/equilibria.hpp"
#include "cic/errors.hpp"
#include "cic/stability.hpp"
#include "oracles.hpp"

using namespace cic;

TEST_CASE("linearization at zero is the diagonal heat operator") {
  const ControlParams uncontrolled{};
  const Eigen::MatrixXd a = assemble(SpectralField::zero(6), 3.0, uncontrolled, 6);
  for (int k = 1; k <= 6; ++k) {
    for (int m = 1; m <= 6; ++m) {
      if (k == m) {
        CHECK(a(k - 1, k - 1) == doctest::Approx(-k * k + 3.0).epsilon(1e-15));
      } else {
        CHECK(a(k - 1, m - 1) == 0.0);
      }
    }
  }
}

TEST_CASE("control shifts the diagonal and nothing else at zero") {
  ControlParams p;
  p.gain = -2.0;
  p.kernel = theorem_kernel(10.0, 8);
  const Eigen::MatrixXd a = assemble(SpectralField::zero(8), 10.0, p, 8);
  const std::vector<double> mu = theorem_spectrum(10.0, -2.0, p.kernel, 8);
  for (int k = 1; k <= 8; ++k) {
    CHECK(a(k - 1, k - 1) == mu[k - 1]);
    for (int m = 1; m <= 8; ++m) {
      if (m != k) CHECK(a(k - 1, m - 1) == 0.0);
    }
  }
}

TEST_CASE("potential coupling matches the quadrature oracle") {
  const SpectralField u = SpectralField::single_mode(1, 1.0, 4);
  const double lambda = 5.0;
  const ControlParams uncontrolled{};
  const Eigen::MatrixXd a = assemble(u, lambda, uncontrolled, 4);
  for (int k = 1; k <= 4; ++k) {
    for (int m = 1; m <= 4; ++m) {
      const double w = 2.0 / oracle::kPi *
                       oracle::integrate([&](double x) {
                         const double s = std::sin(x);
                         return s * s * std::sin(k * x) * std::sin(m * x);
                       });
      double expected = -3.0 * lambda * w;
      if (k == m) expected += -k * k + lambda;
      CHECK(a(k - 1, m - 1) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  // W_11 for sin(x)^2 is 3/4 analytically.
  CHECK(a(0, 0) == doctest::Approx(-1.0 + lambda - 3.0 * lambda * 0.75).epsilon(1e-13));
}

TEST_CASE("spectrum of a diagonal matrix") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d(0, 0) = -1.0;
  d(1, 1) = -4.0;
  d(2, 2) = -9.0;
  const LinearizationReport rep = spectrum(d);
  CHECK(rep.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(rep.eigenvalues[1] == doctest::Approx(-4.0));
  CHECK(rep.eigenvalues[2] == doctest::Approx(-9.0));
  CHECK(rep.morse_index == 0);
  CHECK(rep.margin == doctest::Approx(-1.0));
  CHECK(rep.zero_counts[0] == 0);
  CHECK(rep.zero_counts[1] == 1);
  CHECK(rep.zero_counts[2] == 2);
}

TEST_CASE("trivial equilibrium at lambda = 10 has Morse index 3") {
  const ControlParams uncontrolled{};
  const LinearizationReport rep =
      spectrum(assemble(SpectralField::zero(16), 10.0, uncontrolled, 16));
  CHECK(rep.morse_index == 3);
  CHECK(rep.margin == doctest::Approx(9.0));
}

TEST_CASE("u_2 at lambda = 10 has Morse index 1") {
  const SpectralField u = find_equilibrium(10.0, 2, +1, 64);
  const ControlParams uncontrolled{};
  const LinearizationReport rep = spectrum(assemble(u, 10.0, uncontrolled, 64));
  CHECK(rep.morse_index == 1);
}

TEST_CASE("eigenvector zero counts follow Sturm-Liouville ordering") {
  const SpectralField u = find_equilibrium(10.0, 2, +1, 64);
  const ControlParams uncontrolled{};
  const LinearizationReport rep = spectrum(assemble(u, 10.0, uncontrolled, 64));
  for (int i = 0; i < 5; ++i) CHECK(rep.zero_counts[i] == i);
}

TEST_CASE("unstable eigenvectors avoid the vertex space") {
  for (auto [j, lambda] : {std::pair{2, 10.0}, {3, 15.0}}) {
    const int n = recommended_truncation(lambda);
    const SpectralField u = find_equilibrium(lambda, j, +1, n);
    const ControlParams uncontrolled{};
    const LinearizationReport rep = spectrum(assemble(u, lambda, uncontrolled, n));
    REQUIRE(rep.morse_index == j - 1);
    for (int i = 0; i < rep.morse_index; ++i) {
      CHECK(vertex_residual(rep.eigenvectors[i], j) > 0.99);
      CHECK(rep.zero_counts[i] <= j - 2);
    }
  }
}

TEST_CASE("closed-form spectrum values") {
  // lambda_j = 1, b = -1.5: modes (-3, -3, -8, ...)
  const std::vector<double> mu1 = theorem_spectrum(1.0, -1.5, theorem_kernel(1.0, 5), 5);
  CHECK(mu1[0] == doctest::Approx(-3.0));
  CHECK(mu1[1] == doctest::Approx(-3.0));
  CHECK(mu1[2] == doctest::Approx(-8.0));

  // lambda_j = 4, b = -3: (-3, -6, -5), all negative.
  const std::vector<double> mu4 = theorem_spectrum(4.0, -3.0, theorem_kernel(4.0, 3), 3);
  CHECK(mu4[0] == doctest::Approx(-3.0));
  CHECK(mu4[1] == doctest::Approx(-6.0));
  CHECK(mu4[2] == doctest::Approx(-5.0));
  for (double m : mu4) CHECK(m < 0.0);

  // b = 0 leaves the uncontrolled spectrum regardless of the kernel.
  const std::vector<double> mu0 = theorem_spectrum(7.0, 0.0, reflection_kernel(-1, 6), 6);
  for (int k = 1; k <= 6; ++k) CHECK(mu0[k - 1] == doctest::Approx(-k * k + 7.0));
}

TEST_CASE("stabilization threshold b < -lambda_j/2") {
  for (int j = 1; j <= 4; ++j) {
    const double lj = bifurcation_value(j);
    const FilterKernel h = theorem_kernel(lj, 64);
    const std::vector<double> good = theorem_spectrum(lj, -lj / 2 - 0.1, h, 64);
    for (double m : good) CHECK(m < 0.0);
    // The bound is sufficient, not sharp: some larger b does fail. Mode 1 of
    // the controlled block crosses zero at b = (1 - lambda_j)/2 > -lambda_j/2.
    const std::vector<double> bad =
        theorem_spectrum(lj, (1.0 - lj) / 2.0, h, 64);
    double top = -1e300;
    for (double m : bad) top = std::max(top, m);
    CHECK(top >= 0.0);
  }
}

TEST_CASE("verdicts") {
  ControlParams uncontrolled{};

  const SpectralField u1 = find_equilibrium(2.0, 1, +1, 48);
  const StabilityVerdict v1 = verdict(u1, 2.0, uncontrolled, 48);
  CHECK(v1.stable);

  const SpectralField u2 = find_equilibrium(4.5, 2, +1, 48);
  const StabilityVerdict v2 = verdict(u2, 4.5, uncontrolled, 48);
  CHECK_FALSE(v2.stable);
  CHECK(v2.morse_index == 1);
  CHECK(v2.margin > 0.0);

  ControlParams selective;
  selective.gain = -4.0;
  selective.kernel = selective_kernel(2, 4.5, 48);
  const StabilityVerdict vc = verdict(u2, 4.5, selective, 48);
  CHECK(vc.stable);

  ControlParams invasive;
  invasive.gain = -4.0;
  invasive.kernel = theorem_kernel(4.5, 48);  // flips h_2, moves u_2
  CHECK_THROWS_AS(verdict(u2, 4.5, invasive, 48), InvasiveControl);
}

TEST_CASE("eigenvalues are converged in the truncation") {
  const SpectralField u = find_equilibrium(10.0, 2, +1, 128);
  const ControlParams uncontrolled{};
  const LinearizationReport coarse = spectrum(assemble(u, 10.0, uncontrolled, 64));
  const LinearizationReport fine = spectrum(assemble(u, 10.0, uncontrolled, 128));
  CHECK(std::abs(coarse.eigenvalues[0] - fine.eigenvalues[0]) < 1e-8);
  CHECK(std::abs(coarse.eigenvalues[1] - fine.eigenvalues[1]) < 1e-8);
}

TEST_CASE("recommended truncation grows with lambda") {
  CHECK(recommended_truncation(1.0) == 36);
  CHECK(recommended_truncation(30.0) >= 4 * 6 + 32);
}
