#include "cic/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cic/equilibria.hpp"
#include "cic/errors.hpp"
#include "cic/kernels.hpp"

namespace cic {

Eigen::MatrixXd assemble(const SpectralField& u_star, double lambda,
                         const ControlParams& p, int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("assemble: n_modes must be >= 1");
  p.validate();

  const int nu = u_star.truncation();
  const int m = 4 * std::max(n_modes, std::max(nu, 1));

  // Cosine coefficients of u*^2 up to mode 2N: u*^2 has degree 2*nu and the
  // grid resolves degree < m+1, so the analysis is exact.
  std::vector<double> c(static_cast<std::size_t>(2 * n_modes + 1), 0.0);
  if (nu > 0) {
    std::vector<double> v(static_cast<std::size_t>(m));
    kernels::sine_plan(m, nu)->synthesize(u_star.coeffs(), v);
    for (double& x : v) x *= x;
    kernels::cosine_plan(m, 2 * n_modes)->analyze(v, c);
  }

  Eigen::MatrixXd a(n_modes, n_modes);
  const double b = p.gain;
#pragma omp parallel for schedule(static) if (n_modes >= 96)
  for (int k = 1; k <= n_modes; ++k) {
    for (int mm = 1; mm <= n_modes; ++mm) {
      // W_km = (c_|k-m| - c_{k+m})/2 for k != m; c_0 enters the diagonal whole.
      double w;
      if (k == mm) {
        w = c[0] - 0.5 * c[static_cast<std::size_t>(2 * k)];
      } else {
        w = 0.5 * (c[static_cast<std::size_t>(std::abs(k - mm))] -
                   c[static_cast<std::size_t>(k + mm)]);
      }
      double entry = -3.0 * lambda * w;
      if (k == mm) {
        entry += -static_cast<double>(k) * k + lambda + b * (1.0 - p.kernel.at(k));
      }
      a(k - 1, mm - 1) = entry;
    }
  }
  return a;
}

LinearizationReport spectrum(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw std::invalid_argument("spectrum: matrix must be square");
  }
  const int n = static_cast<int>(matrix.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(matrix);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("spectrum: eigensolver failed");
  }

  LinearizationReport rep;
  rep.eigenvalues.resize(static_cast<std::size_t>(n));
  rep.eigenvectors.reserve(static_cast<std::size_t>(n));
  rep.zero_counts.resize(static_cast<std::size_t>(n));

  // Eigen returns ascending order; report descending.
  for (int r = 0; r < n; ++r) {
    const int src = n - 1 - r;
    rep.eigenvalues[r] = es.eigenvalues()(src);
    Eigen::VectorXd v = es.eigenvectors().col(src);
    const double peak = v.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
      if (std::abs(v(i)) > 1e-12 * peak) {
        if (v(i) < 0.0) v = -v;
        break;
      }
    }
    rep.eigenvectors.emplace_back(std::vector<double>(v.data(), v.data() + n));
    rep.zero_counts[r] = count_zeros(rep.eigenvectors.back());
  }
  rep.morse_index = static_cast<int>(
      std::count_if(rep.eigenvalues.begin(), rep.eigenvalues.end(),
                    [](double mu) { return mu > kTolZero; }));
  rep.margin = rep.eigenvalues.empty() ? 0.0 : rep.eigenvalues.front();
  return rep;
}

std::vector<double> theorem_spectrum(double lambda_j, double b,
                                     const FilterKernel& h, int n_modes) {
  std::vector<double> mu(static_cast<std::size_t>(n_modes));
  for (int k = 1; k <= n_modes; ++k) {
    mu[k - 1] = -static_cast<double>(k) * k + lambda_j + b * (1.0 - h.at(k));
  }
  return mu;
}

StabilityVerdict verdict(const SpectralField& u_star, double lambda,
                         const ControlParams& p, int n_modes) {
  p.validate();
  const double norm = sobolev_norm(u_star, 0.0);
  if (norm > 0.0 && p.gain != 0.0) {
    const double invasive =
        sobolev_norm(u_star - apply_filter(p.kernel, u_star), 0.0) / norm;
    if (invasive > 1e-8) {
      throw InvasiveControl("filter does not preserve the equilibrium (relative "
                            "invasiveness " + std::to_string(invasive) + ")");
    }
  }
  const LinearizationReport rep = spectrum(assemble(u_star, lambda, p, n_modes));
  StabilityVerdict out;
  out.stable = rep.margin < -kTolZero;
  out.morse_index = rep.morse_index;
  out.margin = rep.margin;
  return out;
}

int recommended_truncation(double lambda) {
  const double root = std::sqrt(std::max(lambda, 0.0));
  return 4 * static_cast<int>(std::ceil(root)) + 32;
}

}  // namespace cic
