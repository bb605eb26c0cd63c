#pragma once

#include <numbers>
#include <vector>

namespace cic {

inline constexpr double kPi = std::numbers::pi;

/// A function on (0, pi) with homogeneous Dirichlet values, stored as the
/// truncated sine series u(x) = sum_{k=1..N} a_k sin(kx) with the coefficient
/// convention a_k = (2/pi) * integral of u(x) sin(kx) dx. Immutable after
/// construction; all coefficients are checked finite.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(std::vector<double> coeffs);

  static SpectralField zero(int n_modes);
  static SpectralField single_mode(int k, double amplitude, int n_modes);

  int truncation() const { return static_cast<int>(a_.size()); }
  /// 1-based mode index; modes beyond the truncation read as zero.
  double coeff(int k) const {
    return (k >= 1 && k <= truncation()) ? a_[static_cast<std::size_t>(k - 1)] : 0.0;
  }
  const std::vector<double>& coeffs() const { return a_; }

 private:
  std::vector<double> a_;
};

SpectralField operator+(const SpectralField& f, const SpectralField& g);
SpectralField operator-(const SpectralField& f, const SpectralField& g);
SpectralField operator-(const SpectralField& f);
SpectralField operator*(double c, const SpectralField& f);

/// Point values u(x_i) on the uniform open grid x_i = i pi/(M+1), i = 1..M.
struct GridSamples {
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  /// Grid location of values[i] (0-based storage index).
  double x(int i) const { return (i + 1) * kPi / (size() + 1); }
};

/// Evaluate the sine series on an M-point grid.
GridSamples synthesize(const SpectralField& f, int grid_size);

/// Discrete sine coefficients of the samples, consistent with
/// (2/pi) * integral v(x) sin(kx) dx. Throws TruncationError if n_modes
/// exceeds the grid size.
SpectralField analyze(const GridSamples& samples, int n_modes);

/// Coefficient-weighted Sobolev norm ( sum_k (1+k^2)^s a_k^2 )^{1/2}.
/// s = 0 is the plain coefficient l2 norm.
double sobolev_norm(const SpectralField& f, double s);

/// max |u(x_i)| on an oversampled grid (oversample * N points).
double sup_norm(const SpectralField& f, int oversample = 4);

/// Sine coefficients of u^3, exact for the first N modes: the field is
/// synthesized on a 4N grid (cubic products reach mode 3N, so 4N is
/// alias-free), cubed pointwise and analyzed back. Modes above N are
/// discarded; use cube_with_tail to account for them.
SpectralField cube(const SpectralField& f);

struct CubeDiagnostics {
  SpectralField field;  // modes 1..N of u^3
  double tail_energy;   // sum of squared coefficients for modes N+1..3N
};
CubeDiagnostics cube_with_tail(const SpectralField& f);

/// Spatial reflection x -> pi - x: a_k -> (-1)^(k+1) a_k.
SpectralField reflect(const SpectralField& f);

/// Projection onto the vertex space X_j spanned by sin(j*l*x) for odd l:
/// keeps coefficients with index k = j*l, l odd, zeroes the rest.
SpectralField project_vertex(const SpectralField& f, int j);

/// Relative l2 distance to X_j: |f - P_j f| / max(|f|, eps_mach).
double vertex_residual(const SpectralField& f, int j);

}  // namespace cic
