#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cic/control.hpp"
#include "cic/field.hpp"

namespace cic {

/// Eigenvalues below -kTolZero count as stable, above +kTolZero as unstable.
inline constexpr double kTolZero = 1e-9;

/// Spectrum of the linearization at an equilibrium, sorted descending.
struct LinearizationReport {
  std::vector<double> eigenvalues;          // descending
  std::vector<SpectralField> eigenvectors;  // unit l2 norm, first significant entry > 0
  int morse_index = 0;                      // #{mu > kTolZero}
  double margin = 0.0;                      // largest eigenvalue
  std::vector<int> zero_counts;             // interior zeros per eigenvector
};

/// Galerkin matrix of the controlled linearization
///   v -> v_xx + lambda (1 - 3 u*^2) v + b (v - C_h[v])
/// in the sine basis:
///   A(k,m) = (-k^2 + lambda + b(1-h_k)) delta_km - 3 lambda W_km,
/// where W_km = (2/pi) * integral of u*^2 sin(kx) sin(mx) dx. The potential
/// u*^2 is squared on a padded grid and cosine-analyzed, so W is alias-free.
Eigen::MatrixXd assemble(const SpectralField& u_star, double lambda,
                         const ControlParams& p, int n_modes);

/// Full symmetric eigendecomposition of an assembled matrix.
LinearizationReport spectrum(const Eigen::MatrixXd& matrix);

/// Closed-form eigenvalues mu_k = -k^2 + lambda_j + b (1 - h_k) of the
/// controlled linearization at the trivial equilibrium (no matrix assembly).
std::vector<double> theorem_spectrum(double lambda_j, double b,
                                     const FilterKernel& h, int n_modes);

struct StabilityVerdict {
  bool stable = false;
  int morse_index = 0;
  double margin = 0.0;
};

/// Stability of u* under the controlled dynamics. Throws InvasiveControl if
/// the control term does not vanish at u* (the verdict would not apply to the
/// controlled system otherwise): with b != 0 the filter must reproduce u* to
/// a relative 1e-8. b = 0 and u* = 0 always qualify.
StabilityVerdict verdict(const SpectralField& u_star, double lambda,
                         const ControlParams& p, int n_modes);

/// Truncation that resolves all near-marginal modes at parameter lambda.
int recommended_truncation(double lambda);

}  // namespace cic
