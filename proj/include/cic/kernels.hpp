#pragma once

#include <memory>
#include <span>
#include <vector>

namespace cic::kernels {

// Low-level transform kernels on the uniform open grid
//   x_i = i * pi / (M+1),  i = 1..M.
//
// Every kernel comes in a _serial and a _parallel (OpenMP) flavor. The
// parallel flavor splits over output entries only and runs the same inner
// loop per entry, so both flavors produce bitwise-identical results.

/// Precomputed sine table for repeated transforms at fixed sizes.
/// Table entries use integer angle reduction, so sin((k)(i) pi/(M+1)) is
/// accurate to ~1 ulp even for large k*i products.
class SineTransformPlan {
 public:
  SineTransformPlan(int grid_size, int n_modes);

  int grid_size() const { return grid_size_; }
  int n_modes() const { return n_modes_; }

  /// values[i] = sum_k coeffs[k] sin((k+1) x_i). coeffs may be shorter than
  /// n_modes(); missing modes are treated as zero.
  void synthesize_serial(std::span<const double> coeffs, std::span<double> values) const;
  void synthesize_parallel(std::span<const double> coeffs, std::span<double> values) const;
  void synthesize(std::span<const double> coeffs, std::span<double> values) const;

  /// coeffs[k] = 2/(M+1) sum_i values[i] sin((k+1) x_i).
  /// Exact inverse of synthesize for mode content up to M.
  void analyze_serial(std::span<const double> values, std::span<double> coeffs) const;
  void analyze_parallel(std::span<const double> values, std::span<double> coeffs) const;
  void analyze(std::span<const double> values, std::span<double> coeffs) const;

 private:
  int grid_size_ = 0;
  int n_modes_ = 0;
  std::vector<double> table_;    // table_[i * n_modes_ + k] = sin((k+1)(i+1) pi/(M+1))
  std::vector<double> table_t_;  // transposed copy; analysis reads rows
};

/// Cosine analysis on the same grid:
///   c[p] = 2/(M+1) sum_i v_i cos(p x_i)  for p >= 1,
///   c[0] = 1/(M+1) sum_i v_i.
/// Exact for samples of even trig polynomials vanishing at 0 and pi whose
/// degree stays below M+1.
class CosineAnalysisPlan {
 public:
  CosineAnalysisPlan(int grid_size, int max_mode);

  int grid_size() const { return grid_size_; }
  int max_mode() const { return max_mode_; }

  void analyze_serial(std::span<const double> values, std::span<double> coeffs) const;
  void analyze_parallel(std::span<const double> values, std::span<double> coeffs) const;
  void analyze(std::span<const double> values, std::span<double> coeffs) const;

 private:
  int grid_size_ = 0;
  int max_mode_ = 0;
  std::vector<double> table_;  // table_[p * grid_size_ + i] = cos(p (i+1) pi/(M+1))
};

void pointwise_cube_serial(std::span<const double> in, std::span<double> out);
void pointwise_cube_parallel(std::span<const double> in, std::span<double> out);
void pointwise_cube(std::span<const double> in, std::span<double> out);

/// Shared plan caches. Plans are immutable once built and safe to use from
/// multiple threads.
std::shared_ptr<const SineTransformPlan> sine_plan(int grid_size, int n_modes);
std::shared_ptr<const CosineAnalysisPlan> cosine_plan(int grid_size, int max_mode);

}  // namespace cic::kernels
