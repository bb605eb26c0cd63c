#pragma once

#include <vector>

#include "cic/field.hpp"

namespace cic {

/// A Fourier filter: mode k of a field is multiplied by h_k. Entries are
/// stored up to a finite truncation; every mode beyond it uses tail_value
/// (+1 by default, i.e. the tail is uncontrolled).
struct FilterKernel {
  std::vector<double> h;    // h[0] = h_1
  double tail_value = 1.0;

  int truncation() const { return static_cast<int>(h.size()); }
  /// 1-based filter entry; tail_value beyond the truncation.
  double at(int m) const {
    return (m >= 1 && m <= truncation()) ? h[static_cast<std::size_t>(m - 1)] : tail_value;
  }
  /// True when every stored entry and the tail are exactly -1 or +1.
  bool unit_modulus() const;
};

/// h_m = 1 for every m: the filter that leaves all fields unchanged.
FilterKernel identity_kernel(int n_modes);

/// h_k = sign * (-1)^(k+1); with sign = +1 this filter equals the spatial
/// reflection x -> pi - x.
FilterKernel reflection_kernel(int sign, int n_modes);

/// Flip the sign of every mode that is linearly unstable at the trivial
/// equilibrium: h_m = -1 for m <= ktilde, +1 above, where ktilde is the
/// largest integer with ktilde^2 <= lambda.
FilterKernel theorem_kernel(double lambda, int n_modes);

/// As theorem_kernel, but entries at indices j*l (l odd) are forced back to
/// +1 so the filter acts as the identity on the vertex space X_j.
FilterKernel selective_kernel(int j, double lambda, int n_modes);

/// Termwise product; tails multiply likewise.
FilterKernel compose(const FilterKernel& h1, const FilterKernel& h2);

/// Membership in the vertex isotropy group H_j: h_{j*l} = 1 exactly for all
/// odd l with j*l within the truncation, and tail_value = 1.
bool is_member_H(const FilterKernel& h, int j);

/// a_k -> h_k a_k termwise.
SpectralField apply_filter(const FilterKernel& h, const SpectralField& f);

/// Feedback parameters for the control term b (u - C_h[u]). The delay is
/// part of the serialized configuration but must be zero; any other value is
/// rejected by validate().
struct ControlParams {
  double gain = 0.0;  // b, 1/time
  FilterKernel kernel;
  double delay = 0.0;  // tau

  void validate() const;
};

/// Coefficients b (1 - h_k) a_k of the feedback term.
SpectralField control_term(const ControlParams& p, const SpectralField& f);

}  // namespace cic
