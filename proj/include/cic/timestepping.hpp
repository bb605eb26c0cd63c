#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cic/control.hpp"
#include "cic/field.hpp"

namespace cic {

/// A reproducible run description for the controlled equation
///   u_t = u_xx + lambda u (1 - u^2) + b (u - C_h[u]).
struct SimConfig {
  int n_modes = 128;
  double dt = 1e-3;
  double horizon = 1.0;  // T
  double lambda = 1.0;
  ControlParams control;
  SpectralField initial;
  std::string initial_spec = "inline";  // provenance string for manifests
  int record_every = 1;

  void validate() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<SpectralField> states;
  std::vector<double> distances;      // coefficient-space distance to the target
  std::vector<double> control_norms;  // |b (1 - h) u| per snapshot
};

/// One second-order exponential-time-differencing step. The linear symbol
/// c_k = -k^2 + lambda + b(1 - h_k) is integrated exactly via exp(c_k dt);
/// the cubic term uses the predictor-corrector phi1/phi2 weights. Equilibria
/// of the truncated system are exact fixed points of the scheme.
SpectralField step(const SpectralField& f, double lambda, const ControlParams& p,
                   double dt);

/// Repeated stepping with snapshot recording. Throws Blowup(t) when the
/// sup-norm of the state exceeds 10.
Trajectory simulate(const SimConfig& cfg, const SpectralField& target);

/// Least-squares slope of log(distance) over times in [t0, t1]. Throws
/// DegenerateWindow for fewer than 4 samples or nonpositive distances.
double measure_decay_rate(const Trajectory& traj, double t0, double t1);

namespace kernels {
class SineTransformPlan;
}

/// Reusable stepper: precomputed exponential weights and transform plan.
class EtdStepper {
 public:
  EtdStepper(int n_modes, double lambda, const ControlParams& p, double dt);

  /// Advance one step; when sup_out is non-null it receives the sup-norm of
  /// the incoming state (measured on the padded grid).
  SpectralField advance(const SpectralField& f, double* sup_out = nullptr) const;

  double dt() const { return dt_; }

 private:
  std::vector<double> nonlinear(const SpectralField& f, double* sup_out) const;

  int n_modes_;
  double lambda_;
  double dt_;
  std::vector<double> exp_c_;  // e^{c_k dt}
  std::vector<double> w1_;     // dt phi1(c_k dt)
  std::vector<double> w2_;     // dt phi2(c_k dt)
  std::shared_ptr<const kernels::SineTransformPlan> plan_;
};

}  // namespace cic
