#include "cic/equilibria.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <functional>

#include "cic/errors.hpp"
#include "cic/kernels.hpp"
#include "cic/stability.hpp"

namespace cic {

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;  // (u, u')

constexpr double kShootTol = 1e-10;
constexpr double kSeedTol = 1e-6;
constexpr double kBlowupGuard = 10.0;
constexpr int kInteriorSamples = 2048;

struct Rhs {
  double lambda;
  void operator()(const State& s, State& d, double) const {
    d[0] = s[1];
    d[1] = -lambda * s[0] * (1.0 - s[0] * s[0]);
  }
};

// Integrate over [0, pi] with dense output, visiting user-supplied sample
// locations in order. visit(x, state) is called for each strictly interior
// sample point.
State integrate_shot(double lambda, double slope,
                     const std::vector<double>& sample_x,
                     const std::function<void(double, const State&)>& visit) {
  auto stepper = odeint::make_dense_output(kShootTol, kShootTol,
                                           odeint::runge_kutta_dopri5<State>());
  const Rhs rhs{lambda};
  State s{0.0, slope};
  stepper.initialize(s, 0.0, 1e-4);

  std::size_t next = 0;
  std::size_t steps = 0;
  while (stepper.current_time() < kPi) {
    stepper.do_step(rhs);
    if (std::abs(stepper.current_state()[0]) > kBlowupGuard) {
      throw IntegrationBlowup(stepper.current_time(), stepper.current_state()[0]);
    }
    if (++steps > 1000000) {
      throw IntegrationBlowup(stepper.current_time(), stepper.current_state()[0]);
    }
    const double reach = std::min(stepper.current_time(), kPi);
    while (next < sample_x.size() && sample_x[next] <= reach) {
      State si;
      stepper.calc_state(sample_x[next], si);
      if (visit) visit(sample_x[next], si);
      ++next;
    }
  }
  State terminal;
  stepper.calc_state(kPi, terminal);
  return terminal;
}

std::vector<double> interior_grid(int n) {
  std::vector<double> x(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) x[i - 1] = i * kPi / n;
  return x;
}

}  // namespace

double bifurcation_value(int j) {
  if (j < 1) throw std::invalid_argument("bifurcation_value: j must be >= 1");
  return static_cast<double>(j) * j;
}

ShootingState shoot(double lambda, double slope) {
  if (lambda <= 0.0) throw std::invalid_argument("shoot: lambda must be positive");
  static const std::vector<double> samples = interior_grid(kInteriorSamples);
  int zeros = 0;
  double prev = 0.0;
  auto visit = [&](double, const State& s) {
    if (s[0] != 0.0) {
      if (prev != 0.0 && std::signbit(prev) != std::signbit(s[0])) ++zeros;
      prev = s[0];
    }
  };
  const State terminal = integrate_shot(lambda, slope, samples, visit);
  return {slope, terminal[0], zeros};
}

namespace {

// Unwrapped phase angle of (u, u') at x = pi, plus the plain terminal data.
// Zeros of u occur each time the phase passes a multiple of pi, so the j-th
// Dirichlet root is the unique slope with theta(pi) = j*pi; the phase is
// monotone in the slope (the orbit period grows with amplitude), which makes
// it a bisection-safe bracketing function even where the roots accumulate
// exponentially close to the separatrix.
struct PhaseShot {
  double theta = 0.0;
  double terminal = 0.0;
  int zeros = 0;
  bool bounded = true;
};

PhaseShot shoot_phase(double lambda, double slope) {
  static const std::vector<double> samples = interior_grid(kInteriorSamples);
  const double omega = std::sqrt(lambda);
  PhaseShot out;
  double alpha_prev = 0.0;
  double prev_u = 0.0;
  auto visit = [&](double, const State& s) {
    const double alpha = std::atan2(omega * s[0], s[1]);
    double d = alpha - alpha_prev;
    while (d > kPi) d -= 2.0 * kPi;
    while (d <= -kPi) d += 2.0 * kPi;
    out.theta += d;
    alpha_prev = alpha;
    if (s[0] != 0.0) {
      if (prev_u != 0.0 && std::signbit(prev_u) != std::signbit(s[0])) ++out.zeros;
      prev_u = s[0];
    }
  };
  try {
    const State terminal = integrate_shot(lambda, slope, samples, visit);
    const double alpha = std::atan2(omega * terminal[0], terminal[1]);
    double d = alpha - alpha_prev;
    while (d > kPi) d -= 2.0 * kPi;
    while (d <= -kPi) d += 2.0 * kPi;
    out.theta += d;
    out.terminal = terminal[0];
  } catch (const IntegrationBlowup&) {
    out.bounded = false;
  }
  return out;
}

}  // namespace

SpectralField equation_residual(const SpectralField& f, double lambda) {
  const SpectralField cubed = cube(f);
  std::vector<double> r(static_cast<std::size_t>(f.truncation()));
  for (int k = 1; k <= f.truncation(); ++k) {
    r[k - 1] = (-static_cast<double>(k) * k + lambda) * f.coeff(k) -
               lambda * cubed.coeff(k);
  }
  return SpectralField(std::move(r));
}

SpectralField refine_newton(const SpectralField& f, double lambda) {
  const int n = f.truncation();
  SpectralField u = f;
  const ControlParams uncontrolled{};
  for (int it = 0; it <= 25; ++it) {
    const SpectralField r = equation_residual(u, lambda);
    if (sobolev_norm(r, 0.0) < 1e-10) return u;
    if (it == 25) break;
    const Eigen::MatrixXd jac = assemble(u, lambda, uncontrolled, n);
    Eigen::VectorXd rhs(n);
    for (int k = 1; k <= n; ++k) rhs(k - 1) = -r.coeff(k);
    const Eigen::VectorXd delta = jac.partialPivLu().solve(rhs);
    std::vector<double> a = u.coeffs();
    for (int k = 0; k < n; ++k) a[k] += delta(k);
    u = SpectralField(std::move(a));
  }
  throw NoConvergence(lambda);
}

int count_zeros(const SpectralField& f) {
  if (f.truncation() == 0) return 0;
  const GridSamples g = synthesize(f, 16 * f.truncation());
  int zeros = 0;
  double prev = 0.0;
  for (double u : g.values) {
    if (u != 0.0) {
      if (prev != 0.0 && std::signbit(prev) != std::signbit(u)) ++zeros;
      prev = u;
    }
  }
  return zeros;
}

SpectralField find_equilibrium(double lambda, int j, int sign, int n_modes) {
  if (j < 1) throw std::invalid_argument("find_equilibrium: j must be >= 1");
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("find_equilibrium: sign must be +1 or -1");
  }
  if (n_modes < 1) throw std::invalid_argument("find_equilibrium: n_modes must be >= 1");
  if (lambda <= bifurcation_value(j)) {
    throw NoBranch("no branch " + std::to_string(j) + " at lambda = " +
                   std::to_string(lambda) + " (needs lambda > " +
                   std::to_string(bifurcation_value(j)) + ")");
  }

  // Bisect the phase condition theta(pi; s) = j*pi over s in (0, sqrt(lambda)].
  // The winding angle decreases in s (softer spring, longer period), dropping
  // from ~sqrt(lambda)*pi at small slopes to below pi past the separatrix, so
  // the j-th root is bracketed whenever lambda > j^2. Slopes beyond the
  // separatrix blow up and count as theta below the target.
  const double smax = std::sqrt(lambda);
  auto winding_above = [&](const PhaseShot& p) {
    return p.bounded && p.theta > j * kPi;
  };

  double lo = smax / 1024.0;
  double hi = smax;
  if (!winding_above(shoot_phase(lambda, lo))) {
    throw BracketFailure("phase winding too small at the sweep origin, lambda = " +
                         std::to_string(lambda));
  }
  double root = lo;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval collapsed to machine limit
    (winding_above(shoot_phase(lambda, mid)) ? lo : hi) = mid;
  }
  root = lo;

  // The terminal value of a near-separatrix branch cannot be resolved below
  // the conditioning floor of the shooting map; a loose terminal value is
  // still a fine Newton seed (the returned field satisfies the spectral
  // residual target).
  const ShootingState st = shoot(lambda, root);
  if (st.zero_count != j - 1 || std::abs(st.terminal_value) > kSeedTol) {
    throw BracketFailure("no slope with " + std::to_string(j - 1) +
                         " interior zeros and small terminal value at lambda = " +
                         std::to_string(lambda));
  }

  // Sample the converged trajectory on the analysis grid and project.
  const int m = 4 * n_modes;
  GridSamples gs;
  gs.values.assign(static_cast<std::size_t>(m), 0.0);
  std::vector<double> grid_x(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) grid_x[i] = (i + 1) * kPi / (m + 1);
  int idx = 0;
  integrate_shot(lambda, root, grid_x,
                 [&](double, const State& s) { gs.values[idx++] = s[0]; });
  SpectralField u = refine_newton(analyze(gs, n_modes), lambda);
  if (sign < 0) u = -u;
  return u;
}

EquilibriumBranch continue_branch(int j, double lambda_from, double lambda_to,
                                  int steps, int n_modes, int sign) {
  if (steps < 1) throw std::invalid_argument("continue_branch: steps must be >= 1");
  EquilibriumBranch branch;
  branch.j = j;
  const ControlParams uncontrolled{};
  SpectralField u = find_equilibrium(lambda_from, j, sign, n_modes);
  for (int i = 0; i < steps; ++i) {
    const double lam =
        (steps == 1) ? lambda_from
                     : lambda_from + i * (lambda_to - lambda_from) / (steps - 1);
    u = (i == 0) ? u : refine_newton(u, lam);
    const LinearizationReport rep = spectrum(assemble(u, lam, uncontrolled, n_modes));
    branch.samples.push_back({lam, u, rep.morse_index, sign});
  }
  return branch;
}

}  // namespace cic
