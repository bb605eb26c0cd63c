#pragma once

#include <stdexcept>
#include <string>

namespace cic {

/// Requested mode count exceeds what the sample grid can resolve.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The shooting integration left the physical region |u| <= 10.
struct IntegrationBlowup : std::runtime_error {
  IntegrationBlowup(double where, double value)
      : std::runtime_error("shooting solution exceeded |u| = 10 at x = " +
                           std::to_string(where)),
        position(where),
        value(value) {}
  double position;
  double value;
};

/// No equilibrium branch exists at the requested parameter value.
struct NoBranch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The slope sweep found no sign change for the requested branch.
struct BracketFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Newton refinement did not reach the residual target.
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(double lambda_at)
      : std::runtime_error("Newton refinement failed to converge at lambda = " +
                           std::to_string(lambda_at)),
        lambda(lambda_at) {}
  double lambda;
};

/// The control term does not vanish at the state a verdict was asked about.
struct InvasiveControl : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A simulation exceeded the sup-norm guard.
struct Blowup : std::runtime_error {
  explicit Blowup(double when)
      : std::runtime_error("simulation blew up at t = " + std::to_string(when)),
        time(when) {}
  double time;
};

/// Too few samples (or nonpositive distances) in a rate-fit window.
struct DegenerateWindow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration (bad step size, nonzero delay, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cic
