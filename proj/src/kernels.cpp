#include "cic/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace cic::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

// Work threshold below which the OpenMP variants are not worth the fork.
constexpr std::int64_t kParallelWork = 1 << 15;

// sin(n * pi / L) with the integer phase reduced mod 2L first, so large
// products k*i do not lose precision in the angle.
inline double sin_reduced(std::int64_t n, int L) {
  const std::int64_t m = n % (2 * static_cast<std::int64_t>(L));
  return std::sin(static_cast<double>(m) * (kPi / L));
}

inline double cos_reduced(std::int64_t n, int L) {
  const std::int64_t m = n % (2 * static_cast<std::int64_t>(L));
  return std::cos(static_cast<double>(m) * (kPi / L));
}

}  // namespace

SineTransformPlan::SineTransformPlan(int grid_size, int n_modes)
    : grid_size_(grid_size), n_modes_(n_modes) {
  if (grid_size < 1 || n_modes < 1) {
    throw std::invalid_argument("SineTransformPlan: sizes must be positive");
  }
  const int L = grid_size_ + 1;
  table_.resize(static_cast<std::size_t>(grid_size_) * n_modes_);
  table_t_.resize(table_.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid_size_; ++i) {
    double* row = table_.data() + static_cast<std::size_t>(i) * n_modes_;
    for (int k = 0; k < n_modes_; ++k) {
      row[k] = sin_reduced(static_cast<std::int64_t>(i + 1) * (k + 1), L);
      table_t_[static_cast<std::size_t>(k) * grid_size_ + i] = row[k];
    }
  }
}

void SineTransformPlan::synthesize_serial(std::span<const double> coeffs,
                                          std::span<double> values) const {
  const int kmax = std::min<int>(n_modes_, static_cast<int>(coeffs.size()));
  for (int i = 0; i < grid_size_; ++i) {
    const double* row = table_.data() + static_cast<std::size_t>(i) * n_modes_;
    double acc = 0.0;
    for (int k = 0; k < kmax; ++k) acc += coeffs[k] * row[k];
    values[i] = acc;
  }
}

void SineTransformPlan::synthesize_parallel(std::span<const double> coeffs,
                                            std::span<double> values) const {
  const int kmax = std::min<int>(n_modes_, static_cast<int>(coeffs.size()));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid_size_; ++i) {
    const double* row = table_.data() + static_cast<std::size_t>(i) * n_modes_;
    double acc = 0.0;
    for (int k = 0; k < kmax; ++k) acc += coeffs[k] * row[k];
    values[i] = acc;
  }
}

void SineTransformPlan::synthesize(std::span<const double> coeffs,
                                   std::span<double> values) const {
  const std::int64_t work =
      static_cast<std::int64_t>(grid_size_) * static_cast<std::int64_t>(coeffs.size());
  if (work >= kParallelWork) {
    synthesize_parallel(coeffs, values);
  } else {
    synthesize_serial(coeffs, values);
  }
}

void SineTransformPlan::analyze_serial(std::span<const double> values,
                                       std::span<double> coeffs) const {
  const int kmax = std::min<int>(n_modes_, static_cast<int>(coeffs.size()));
  const double scale = 2.0 / (grid_size_ + 1);
  for (int k = 0; k < kmax; ++k) {
    const double* row = table_t_.data() + static_cast<std::size_t>(k) * grid_size_;
    double acc = 0.0;
    for (int i = 0; i < grid_size_; ++i) acc += values[i] * row[i];
    coeffs[k] = scale * acc;
  }
}

void SineTransformPlan::analyze_parallel(std::span<const double> values,
                                         std::span<double> coeffs) const {
  const int kmax = std::min<int>(n_modes_, static_cast<int>(coeffs.size()));
  const double scale = 2.0 / (grid_size_ + 1);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < kmax; ++k) {
    const double* row = table_t_.data() + static_cast<std::size_t>(k) * grid_size_;
    double acc = 0.0;
    for (int i = 0; i < grid_size_; ++i) acc += values[i] * row[i];
    coeffs[k] = scale * acc;
  }
}

void SineTransformPlan::analyze(std::span<const double> values,
                                std::span<double> coeffs) const {
  const std::int64_t work =
      static_cast<std::int64_t>(grid_size_) * static_cast<std::int64_t>(coeffs.size());
  if (work >= kParallelWork) {
    analyze_parallel(values, coeffs);
  } else {
    analyze_serial(values, coeffs);
  }
}

CosineAnalysisPlan::CosineAnalysisPlan(int grid_size, int max_mode)
    : grid_size_(grid_size), max_mode_(max_mode) {
  if (grid_size < 1 || max_mode < 0) {
    throw std::invalid_argument("CosineAnalysisPlan: bad sizes");
  }
  const int L = grid_size_ + 1;
  table_.resize(static_cast<std::size_t>(max_mode_ + 1) * grid_size_);
#pragma omp parallel for schedule(static)
  for (int p = 0; p <= max_mode_; ++p) {
    double* row = table_.data() + static_cast<std::size_t>(p) * grid_size_;
    for (int i = 0; i < grid_size_; ++i) {
      row[i] = cos_reduced(static_cast<std::int64_t>(p) * (i + 1), L);
    }
  }
}

void CosineAnalysisPlan::analyze_serial(std::span<const double> values,
                                        std::span<double> coeffs) const {
  const int pmax = std::min<int>(max_mode_ + 1, static_cast<int>(coeffs.size()));
  for (int p = 0; p < pmax; ++p) {
    const double* row = table_.data() + static_cast<std::size_t>(p) * grid_size_;
    double acc = 0.0;
    for (int i = 0; i < grid_size_; ++i) acc += values[i] * row[i];
    const double scale = (p == 0 ? 1.0 : 2.0) / (grid_size_ + 1);
    coeffs[p] = scale * acc;
  }
}

void CosineAnalysisPlan::analyze_parallel(std::span<const double> values,
                                          std::span<double> coeffs) const {
  const int pmax = std::min<int>(max_mode_ + 1, static_cast<int>(coeffs.size()));
#pragma omp parallel for schedule(static)
  for (int p = 0; p < pmax; ++p) {
    const double* row = table_.data() + static_cast<std::size_t>(p) * grid_size_;
    double acc = 0.0;
    for (int i = 0; i < grid_size_; ++i) acc += values[i] * row[i];
    const double scale = (p == 0 ? 1.0 : 2.0) / (grid_size_ + 1);
    coeffs[p] = scale * acc;
  }
}

void CosineAnalysisPlan::analyze(std::span<const double> values,
                                 std::span<double> coeffs) const {
  const std::int64_t work =
      static_cast<std::int64_t>(grid_size_) * static_cast<std::int64_t>(coeffs.size());
  if (work >= kParallelWork) {
    analyze_parallel(values, coeffs);
  } else {
    analyze_serial(values, coeffs);
  }
}

void pointwise_cube_serial(std::span<const double> in, std::span<double> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] * in[i] * in[i];
}

void pointwise_cube_parallel(std::span<const double> in, std::span<double> out) {
  const std::int64_t n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = in[i] * in[i] * in[i];
}

void pointwise_cube(std::span<const double> in, std::span<double> out) {
  if (static_cast<std::int64_t>(in.size()) >= kParallelWork) {
    pointwise_cube_parallel(in, out);
  } else {
    pointwise_cube_serial(in, out);
  }
}

namespace {

std::mutex g_plan_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const SineTransformPlan>> g_sine_plans;
std::map<std::pair<int, int>, std::shared_ptr<const CosineAnalysisPlan>> g_cosine_plans;

}  // namespace

std::shared_ptr<const SineTransformPlan> sine_plan(int grid_size, int n_modes) {
  const std::pair<int, int> key{grid_size, n_modes};
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto it = g_sine_plans.find(key);
    if (it != g_sine_plans.end()) return it->second;
  }
  auto plan = std::make_shared<const SineTransformPlan>(grid_size, n_modes);
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto [it, inserted] = g_sine_plans.emplace(key, std::move(plan));
  return it->second;
}

std::shared_ptr<const CosineAnalysisPlan> cosine_plan(int grid_size, int max_mode) {
  const std::pair<int, int> key{grid_size, max_mode};
  {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto it = g_cosine_plans.find(key);
    if (it != g_cosine_plans.end()) return it->second;
  }
  auto plan = std::make_shared<const CosineAnalysisPlan>(grid_size, max_mode);
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto [it, inserted] = g_cosine_plans.emplace(key, std::move(plan));
  return it->second;
}

}  // namespace cic::kernels
