#pragma once

#include <vector>

#include "cic/field.hpp"

namespace cic {

/// Parameter value where the j-th branch bifurcates from zero: j^2, the
/// eigenvalue of -d^2/dx^2 for sin(jx) on (0, pi).
double bifurcation_value(int j);

struct ShootingState {
  double slope = 0.0;           // u'(0)
  double terminal_value = 0.0;  // u(pi)
  int zero_count = 0;           // interior sign changes on (0, pi)
};

/// Integrate u'' = -lambda u (1 - u^2), u(0) = 0, u'(0) = slope over [0, pi]
/// with adaptive error control (local tolerance 1e-10). Throws
/// IntegrationBlowup when |u| exceeds 10.
ShootingState shoot(double lambda, double slope);

/// Equilibrium on the j-th branch with sign * u'(0) > 0: slope sweep and
/// bisection until |u(pi)| < 1e-10 with exactly j-1 interior zeros, then
/// spectral projection and Newton refinement to residual < 1e-10.
/// Throws NoBranch if lambda <= j^2 and BracketFailure if the sweep finds
/// no matching root.
SpectralField find_equilibrium(double lambda, int j, int sign, int n_modes);

/// Coefficients of u_xx + lambda u (1 - u^2) for the truncated field:
/// r_k = (-k^2 + lambda) a_k - lambda cube(f)_k.
SpectralField equation_residual(const SpectralField& f, double lambda);

/// Newton iteration on the truncated residual with the exact Jacobian
/// (assemble with b = 0); stops at residual norm < 1e-10 or 25 iterations
/// (then NoConvergence).
SpectralField refine_newton(const SpectralField& f, double lambda);

/// Strict sign changes of the synthesized field on a 16N interior grid.
int count_zeros(const SpectralField& f);

struct BranchSample {
  double lambda = 0.0;
  SpectralField field;
  int morse_index = 0;
  int sign = +1;
};

struct EquilibriumBranch {
  int j = 0;
  std::vector<BranchSample> samples;
};

/// Natural-parameter continuation along the j-th branch: the solution at one
/// lambda seeds Newton at the next; each sample records the Morse index.
EquilibriumBranch continue_branch(int j, double lambda_from, double lambda_to,
                                  int steps, int n_modes, int sign = +1);

}  // namespace cic
