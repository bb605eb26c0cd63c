#include "cic/control.hpp"

#include <cmath>
#include <stdexcept>

#include "cic/errors.hpp"

namespace cic {

bool FilterKernel::unit_modulus() const {
  if (tail_value != 1.0 && tail_value != -1.0) return false;
  for (double v : h) {
    if (v != 1.0 && v != -1.0) return false;
  }
  return true;
}

FilterKernel identity_kernel(int n_modes) {
  FilterKernel k;
  k.h.assign(static_cast<std::size_t>(n_modes), 1.0);
  return k;
}

FilterKernel reflection_kernel(int sign, int n_modes) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("reflection_kernel: sign must be +1 or -1");
  }
  FilterKernel k;
  k.h.resize(static_cast<std::size_t>(n_modes));
  for (int m = 1; m <= n_modes; ++m) {
    k.h[m - 1] = (m % 2 == 1) ? sign : -sign;
  }
  // Tail follows the same alternation only at a finite truncation; the stored
  // entries carry the pattern and the tail stays uncontrolled.
  return k;
}

namespace {

// Largest integer with k^2 <= lambda, robust against sqrt rounding.
int controlled_mode_count(double lambda) {
  if (lambda <= 0.0) throw std::invalid_argument("kernel: lambda must be positive");
  int kt = static_cast<int>(std::floor(std::sqrt(lambda)));
  while (static_cast<double>(kt + 1) * (kt + 1) <= lambda) ++kt;
  while (kt >= 1 && static_cast<double>(kt) * kt > lambda) --kt;
  return kt;
}

}  // namespace

FilterKernel theorem_kernel(double lambda, int n_modes) {
  const int kt = controlled_mode_count(lambda);
  FilterKernel k = identity_kernel(n_modes);
  for (int m = 1; m <= std::min(kt, n_modes); ++m) k.h[m - 1] = -1.0;
  return k;
}

FilterKernel selective_kernel(int j, double lambda, int n_modes) {
  if (j < 1) throw std::invalid_argument("selective_kernel: j must be >= 1");
  FilterKernel k = theorem_kernel(lambda, n_modes);
  for (int l = 1; static_cast<long long>(j) * l <= n_modes; l += 2) {
    k.h[static_cast<std::size_t>(j) * l - 1] = 1.0;
  }
  return k;
}

FilterKernel compose(const FilterKernel& h1, const FilterKernel& h2) {
  FilterKernel k;
  const int n = std::max(h1.truncation(), h2.truncation());
  k.h.resize(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) k.h[m - 1] = h1.at(m) * h2.at(m);
  k.tail_value = h1.tail_value * h2.tail_value;
  return k;
}

bool is_member_H(const FilterKernel& h, int j) {
  if (j < 1) throw std::invalid_argument("is_member_H: j must be >= 1");
  if (h.tail_value != 1.0) return false;
  for (int l = 1; static_cast<long long>(j) * l <= h.truncation(); l += 2) {
    if (h.h[static_cast<std::size_t>(j) * l - 1] != 1.0) return false;
  }
  return true;
}

SpectralField apply_filter(const FilterKernel& h, const SpectralField& f) {
  std::vector<double> a = f.coeffs();
  for (int k = 1; k <= f.truncation(); ++k) a[k - 1] *= h.at(k);
  return SpectralField(std::move(a));
}

void ControlParams::validate() const {
  if (delay != 0.0) {
    throw ConfigError("delayed feedback (tau != 0) is not supported; set tau = 0");
  }
  if (!std::isfinite(gain)) throw ConfigError("feedback gain must be finite");
}

SpectralField control_term(const ControlParams& p, const SpectralField& f) {
  std::vector<double> a = f.coeffs();
  for (int k = 1; k <= f.truncation(); ++k) {
    a[k - 1] = p.gain * (1.0 - p.kernel.at(k)) * a[k - 1];
  }
  return SpectralField(std::move(a));
}

}  // namespace cic
