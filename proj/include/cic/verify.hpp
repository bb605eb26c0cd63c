#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cic/control.hpp"
#include "cic/field.hpp"

namespace cic {

/// Result of one executable property check. A check passes exactly when its
/// worst observed residual stays below the stated tolerance.
struct CheckReport {
  std::string name;
  bool passed = false;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  int trials = 0;
};

/// A signed filter acting between vertex spaces. Objects are indices: 0 is
/// the trivial space {0}, j > 0 the vertex space X_j (odd multiples of j),
/// j < 0 the full tower span{sin(|j| l x) : l >= 1}. Composition is defined
/// only when the inner target matches the outer source.
struct Morphism {
  int source = 0;
  int target = 0;
  int sign = +1;
  FilterKernel kernel;
};

Morphism identity_morphism(int object, int n_modes);

/// Composition g2 after g1; std::nullopt when target(g1) != source(g2).
std::optional<Morphism> compose(const Morphism& g2, const Morphism& g1);

/// Inverse of a unit-modulus morphism (termwise self-inverse filter).
Morphism inverse(const Morphism& g);

/// sign * C_h[f].
SpectralField apply_morphism(const Morphism& g, const SpectralField& f);

// --- check suite -----------------------------------------------------------

/// Associativity, identities and inverses on random unit-modulus signed
/// filters; mismatched source/target compositions must be refused.
CheckReport check_groupoid_axioms(std::uint64_t seed, int trials);

/// The full nonlinearity maps random fields of X_j back into X_j.
CheckReport check_vertex_invariance(int j, int trials, int n_modes,
                                    std::uint64_t seed);

/// Random kernels of H_j reproduce the computed equilibrium u_j.
CheckReport check_noninvasiveness(int j, double lambda, int trials,
                                  std::uint64_t seed);

/// Unstable eigenvectors at u_j lie outside X_j (residual > 0.99, at most
/// j-2 interior zeros), while nonzero members of X_j carry >= j-1 zeros.
CheckReport check_no_instability_in_vertex(int j, double lambda);

/// H2-norm ratio of unit-modulus filters stays <= 1 + 1e-12.
CheckReport check_operator_norm(int trials, std::uint64_t seed);

/// The linearization at u = 0 is exactly diagonal with the closed-form
/// entries for any (b, h).
CheckReport check_eigenfunction_preservation(double b, const FilterKernel& h,
                                             double lambda, int n_modes);

/// reflect(u_j) = (-1)^(j-1) u_j for the computed equilibrium.
CheckReport check_reflection_symmetry(int j, double lambda);

/// Dynamic commutation of a sign-flip morphism with the uncontrolled flow on
/// X_j: evolving the flipped state matches flipping the evolved state.
CheckReport check_semiflow_commutation(int j, double lambda, std::uint64_t seed);

/// The standard suite (deterministic in the seed). With negative_controls,
/// checks that deliberately violated inputs are detected are appended; their
/// `passed` means "the violation was caught".
std::vector<CheckReport> run_all_checks(std::uint64_t seed, int trials,
                                        bool negative_controls);

}  // namespace cic
