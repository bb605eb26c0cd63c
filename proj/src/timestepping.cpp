#include "cic/timestepping.hpp"

#include <cmath>
#include <stdexcept>

#include "cic/errors.hpp"
#include "cic/kernels.hpp"

namespace cic {

namespace {

constexpr double kSupGuard = 10.0;

// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - 1 - z)/z^2, with a 4-term Taylor
// branch near z = 0 where the direct formulas cancel.
double phi1(double z) {
  if (std::abs(z) < 1e-4) {
    return 1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z / 24.0));
  }
  return std::expm1(z) / z;
}

double phi2(double z) {
  if (std::abs(z) < 1e-4) {
    return 0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0));
  }
  return (std::expm1(z) - z) / (z * z);
}

}  // namespace

void SimConfig::validate() const {
  control.validate();
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(horizon >= dt)) throw ConfigError("horizon must be at least one step");
  if (n_modes < 8) throw ConfigError("n_modes must be >= 8");
  if (record_every < 1) throw ConfigError("record_every must be >= 1");
}

EtdStepper::EtdStepper(int n_modes, double lambda, const ControlParams& p, double dt)
    : n_modes_(n_modes), lambda_(lambda), dt_(dt) {
  if (n_modes < 1) throw ConfigError("EtdStepper: n_modes must be >= 1");
  if (!(dt > 0.0)) throw ConfigError("EtdStepper: dt must be positive");
  p.validate();
  exp_c_.resize(static_cast<std::size_t>(n_modes));
  w1_.resize(static_cast<std::size_t>(n_modes));
  w2_.resize(static_cast<std::size_t>(n_modes));
  for (int k = 1; k <= n_modes; ++k) {
    const double c = -static_cast<double>(k) * k + lambda +
                     p.gain * (1.0 - p.kernel.at(k));
    const double z = c * dt;
    exp_c_[k - 1] = std::exp(z);
    w1_[k - 1] = dt * phi1(z);
    w2_[k - 1] = dt * phi2(z);
  }
  plan_ = kernels::sine_plan(4 * n_modes, n_modes);
}

std::vector<double> EtdStepper::nonlinear(const SpectralField& f,
                                          double* sup_out) const {
  const int m = plan_->grid_size();
  std::vector<double> v(static_cast<std::size_t>(m));
  plan_->synthesize(f.coeffs(), v);
  if (sup_out) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    *sup_out = s;
  }
  kernels::pointwise_cube(v, v);
  std::vector<double> n(static_cast<std::size_t>(n_modes_));
  plan_->analyze(v, n);
  for (double& x : n) x *= -lambda_;
  return n;
}

SpectralField EtdStepper::advance(const SpectralField& f, double* sup_out) const {
  if (f.truncation() != n_modes_) {
    throw std::invalid_argument("EtdStepper: field truncation mismatch");
  }
  const std::vector<double>& a = f.coeffs();
  const std::vector<double> n1 = nonlinear(f, sup_out);

  std::vector<double> pred(static_cast<std::size_t>(n_modes_));
  for (int k = 0; k < n_modes_; ++k) pred[k] = exp_c_[k] * a[k] + w1_[k] * n1[k];

  const std::vector<double> n2 = nonlinear(SpectralField(pred), nullptr);
  std::vector<double> out(static_cast<std::size_t>(n_modes_));
  for (int k = 0; k < n_modes_; ++k) out[k] = pred[k] + w2_[k] * (n2[k] - n1[k]);
  return SpectralField(std::move(out));
}

SpectralField step(const SpectralField& f, double lambda, const ControlParams& p,
                   double dt) {
  const EtdStepper stepper(f.truncation(), lambda, p, dt);
  return stepper.advance(f);
}

Trajectory simulate(const SimConfig& cfg, const SpectralField& target) {
  cfg.validate();
  const EtdStepper stepper(cfg.n_modes, cfg.lambda, cfg.control, cfg.dt);

  // Pad the initial data to the working truncation.
  std::vector<double> a0(static_cast<std::size_t>(cfg.n_modes), 0.0);
  for (int k = 1; k <= std::min(cfg.n_modes, cfg.initial.truncation()); ++k) {
    a0[k - 1] = cfg.initial.coeff(k);
  }
  SpectralField u{std::move(a0)};

  const long long total = std::llround(cfg.horizon / cfg.dt);
  Trajectory traj;
  auto record = [&](double t, const SpectralField& f) {
    traj.times.push_back(t);
    traj.states.push_back(f);
    traj.distances.push_back(sobolev_norm(f - target, 0.0));
    traj.control_norms.push_back(sobolev_norm(control_term(cfg.control, f), 0.0));
  };
  record(0.0, u);

  for (long long i = 1; i <= total; ++i) {
    double sup = 0.0;
    u = stepper.advance(u, &sup);
    if (sup > kSupGuard) throw Blowup((i - 1) * cfg.dt);
    if (i % cfg.record_every == 0 || i == total) record(i * cfg.dt, u);
  }
  if (sup_norm(u) > kSupGuard) throw Blowup(total * cfg.dt);
  return traj;
}

double measure_decay_rate(const Trajectory& traj, double t0, double t1) {
  std::vector<double> ts, ys;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const double t = traj.times[i];
    if (t < t0 || t > t1) continue;
    if (!(traj.distances[i] > 0.0)) {
      throw DegenerateWindow("nonpositive distance in fit window");
    }
    ts.push_back(t);
    ys.push_back(std::log(traj.distances[i]));
  }
  if (ts.size() < 4) {
    throw DegenerateWindow("need at least 4 samples in fit window, have " +
                           std::to_string(ts.size()));
  }
  double st = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    st += ts[i];
    sy += ys[i];
  }
  const double mt = st / ts.size(), my = sy / ys.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    num += (ts[i] - mt) * (ys[i] - my);
    den += (ts[i] - mt) * (ts[i] - mt);
  }
  if (den == 0.0) throw DegenerateWindow("zero time spread in fit window");
  return num / den;
}

}  // namespace cic
