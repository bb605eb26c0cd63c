#include "cic/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cic/errors.hpp"
#include "cic/kernels.hpp"

namespace cic {

SpectralField::SpectralField(std::vector<double> coeffs) : a_(std::move(coeffs)) {
  for (double v : a_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("SpectralField: non-finite coefficient");
    }
  }
}

SpectralField SpectralField::zero(int n_modes) {
  return SpectralField(std::vector<double>(static_cast<std::size_t>(n_modes), 0.0));
}

SpectralField SpectralField::single_mode(int k, double amplitude, int n_modes) {
  if (k < 1 || k > n_modes) {
    throw std::invalid_argument("SpectralField::single_mode: index out of range");
  }
  std::vector<double> a(static_cast<std::size_t>(n_modes), 0.0);
  a[static_cast<std::size_t>(k - 1)] = amplitude;
  return SpectralField(std::move(a));
}

SpectralField operator+(const SpectralField& f, const SpectralField& g) {
  const int n = std::max(f.truncation(), g.truncation());
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) a[k - 1] = f.coeff(k) + g.coeff(k);
  return SpectralField(std::move(a));
}

SpectralField operator-(const SpectralField& f, const SpectralField& g) {
  const int n = std::max(f.truncation(), g.truncation());
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) a[k - 1] = f.coeff(k) - g.coeff(k);
  return SpectralField(std::move(a));
}

SpectralField operator-(const SpectralField& f) { return -1.0 * f; }

SpectralField operator*(double c, const SpectralField& f) {
  std::vector<double> a = f.coeffs();
  for (double& v : a) v *= c;
  return SpectralField(std::move(a));
}

GridSamples synthesize(const SpectralField& f, int grid_size) {
  if (grid_size < 1) throw std::invalid_argument("synthesize: grid_size must be >= 1");
  GridSamples out;
  out.values.assign(static_cast<std::size_t>(grid_size), 0.0);
  if (f.truncation() == 0) return out;
  auto plan = kernels::sine_plan(grid_size, f.truncation());
  plan->synthesize(f.coeffs(), out.values);
  return out;
}

SpectralField analyze(const GridSamples& samples, int n_modes) {
  const int m = samples.size();
  if (n_modes < 1) throw std::invalid_argument("analyze: n_modes must be >= 1");
  if (n_modes > m) {
    throw TruncationError("analyze: requested " + std::to_string(n_modes) +
                          " modes from " + std::to_string(m) + " samples");
  }
  std::vector<double> a(static_cast<std::size_t>(n_modes));
  auto plan = kernels::sine_plan(m, n_modes);
  plan->analyze(samples.values, a);
  return SpectralField(std::move(a));
}

double sobolev_norm(const SpectralField& f, double s) {
  double acc = 0.0;
  const auto& a = f.coeffs();
  for (int k = 1; k <= f.truncation(); ++k) {
    const double w = std::pow(1.0 + static_cast<double>(k) * k, s);
    acc += w * a[k - 1] * a[k - 1];
  }
  return std::sqrt(acc);
}

double sup_norm(const SpectralField& f, int oversample) {
  if (f.truncation() == 0) return 0.0;
  const GridSamples g = synthesize(f, oversample * f.truncation());
  double m = 0.0;
  for (double v : g.values) m = std::max(m, std::abs(v));
  return m;
}

SpectralField cube(const SpectralField& f) {
  const int n = f.truncation();
  if (n == 0) return f;
  const int m = 4 * n;
  auto plan = kernels::sine_plan(m, n);
  std::vector<double> v(static_cast<std::size_t>(m));
  plan->synthesize(f.coeffs(), v);
  kernels::pointwise_cube(v, v);
  std::vector<double> a(static_cast<std::size_t>(n));
  plan->analyze(v, a);
  return SpectralField(std::move(a));
}

CubeDiagnostics cube_with_tail(const SpectralField& f) {
  const int n = f.truncation();
  if (n == 0) return {f, 0.0};
  const int m = 4 * n;
  auto plan = kernels::sine_plan(m, 3 * n);
  std::vector<double> v(static_cast<std::size_t>(m));
  plan->synthesize(f.coeffs(), v);
  kernels::pointwise_cube(v, v);
  std::vector<double> a(static_cast<std::size_t>(3 * n));
  plan->analyze(v, a);
  double tail = 0.0;
  for (int k = n; k < 3 * n; ++k) tail += a[k] * a[k];
  a.resize(static_cast<std::size_t>(n));
  return {SpectralField(std::move(a)), tail};
}

SpectralField reflect(const SpectralField& f) {
  std::vector<double> a = f.coeffs();
  for (int k = 2; k <= f.truncation(); k += 2) a[k - 1] = -a[k - 1];
  return SpectralField(std::move(a));
}

SpectralField project_vertex(const SpectralField& f, int j) {
  if (j < 1) throw std::invalid_argument("project_vertex: j must be >= 1");
  std::vector<double> a = f.coeffs();
  for (int k = 1; k <= f.truncation(); ++k) {
    const bool in_vertex = (k % j == 0) && ((k / j) % 2 == 1);
    if (!in_vertex) a[k - 1] = 0.0;
  }
  return SpectralField(std::move(a));
}

double vertex_residual(const SpectralField& f, int j) {
  const double num = sobolev_norm(f - project_vertex(f, j), 0.0);
  const double den = std::max(sobolev_norm(f, 0.0), std::numeric_limits<double>::epsilon());
  return num / den;
}

}  // namespace cic
