#pragma once

// Independent numerical references used by the tests: composite Gauss-Legendre
// quadrature over [0, pi] and direct sine-series evaluation. These are kept
// separate from the library's transform path on purpose.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

/// Composite 10-point Gauss-Legendre quadrature of f over [0, pi].
/// With 512 panels this resolves trig polynomials far beyond any degree the
/// tests use (per-panel phase < 1 rad).
inline double integrate(const std::function<double(double)>& f, int panels = 512) {
  static const double nodes[5] = {0.1488743389816312, 0.4333953941292472,
                                  0.6794095682990244, 0.8650633666889845,
                                  0.9739065285171717};
  static const double weights[5] = {0.2955242247147529, 0.2692667193099963,
                                    0.2190863625159820, 0.1494513491505806,
                                    0.0666713443086881};
  const double h = kPi / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    const double half = 0.5 * h;
    for (int q = 0; q < 5; ++q) {
      acc += weights[q] * (f(mid + half * nodes[q]) + f(mid - half * nodes[q]));
    }
  }
  return acc * 0.5 * kPi / panels;
}

/// Direct evaluation of sum_k a[k-1] sin(kx).
inline double eval_sine_series(const std::vector<double>& a, double x) {
  double u = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    u += a[k] * std::sin(static_cast<double>(k + 1) * x);
  }
  return u;
}

/// (2/pi) * integral of f(x) sin(kx) dx via quadrature.
inline double sine_coefficient(const std::function<double(double)>& f, int k,
                               int panels = 512) {
  return 2.0 / kPi *
         integrate([&](double x) { return f(x) * std::sin(k * x); }, panels);
}

}  // namespace oracle
