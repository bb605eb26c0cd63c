#include "cic/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "cic/equilibria.hpp"
#include "cic/errors.hpp"
#include "cic/rng.hpp"
#include "cic/stability.hpp"
#include "cic/timestepping.hpp"

namespace cic {

namespace {

FilterKernel random_unit_kernel(Rng& rng, int n) {
  FilterKernel k;
  k.h.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) k.h[m] = rng.sign() > 0 ? 1.0 : -1.0;
  return k;
}

// Unit-modulus kernel fixing the given object pointwise: object j > 0 means
// X_j (entries at odd multiples of j forced to +1), j < 0 means the full
// tower span{sin(|j| l x) : all l} (every multiple forced), and 0 is the
// trivial space, which any kernel fixes.
FilterKernel random_isotropy_kernel(Rng& rng, int object, int n) {
  FilterKernel k = random_unit_kernel(rng, n);
  const int j = std::abs(object);
  if (j >= 1) {
    const int stride = (object > 0) ? 2 : 1;
    for (int l = 1; static_cast<long long>(j) * l <= n; l += stride) {
      k.h[j * l - 1] = 1.0;
    }
  }
  return k;
}

SpectralField random_field(Rng& rng, int n, double amplitude = 1.0) {
  std::vector<double> a(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) a[k] = amplitude * rng.uniform(-1.0, 1.0);
  return SpectralField(std::move(a));
}

SpectralField random_vertex_field(Rng& rng, int j, int n, double amplitude = 1.0) {
  std::vector<double> a(static_cast<std::size_t>(n), 0.0);
  for (int l = 1; static_cast<long long>(j) * l <= n; l += 2) {
    a[j * l - 1] = amplitude * rng.uniform(-1.0, 1.0);
  }
  return SpectralField(std::move(a));
}

bool exactly_equal(const SpectralField& f, const SpectralField& g) {
  const int n = std::max(f.truncation(), g.truncation());
  for (int k = 1; k <= n; ++k) {
    if (f.coeff(k) != g.coeff(k)) return false;
  }
  return true;
}

}  // namespace

Morphism identity_morphism(int object, int n_modes) {
  return {object, object, +1, identity_kernel(n_modes)};
}

std::optional<Morphism> compose(const Morphism& g2, const Morphism& g1) {
  if (g1.target != g2.source) return std::nullopt;
  return Morphism{g1.source, g2.target, g1.sign * g2.sign,
                  compose(g2.kernel, g1.kernel)};
}

Morphism inverse(const Morphism& g) {
  if (!g.kernel.unit_modulus()) {
    throw std::invalid_argument("inverse: morphism kernel must be unit-modulus");
  }
  return {g.target, g.source, g.sign, g.kernel};
}

SpectralField apply_morphism(const Morphism& g, const SpectralField& f) {
  return static_cast<double>(g.sign) * apply_filter(g.kernel, f);
}

CheckReport check_groupoid_axioms(std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("check_groupoid_axioms: trials >= 1");
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  const int n = 16;
  // Objects: the trivial space {0}, the vertex spaces X_1..X_4 and the full
  // towers (negative indices).
  const std::vector<int> objects = {0, 1, 2, 3, 4, -1, -2, -3, -4};

  double worst = 0.0;
  bool structure_ok = true;

  auto random_loop = [&](int object) {
    Morphism g;
    g.source = g.target = object;
    g.sign = rng.sign();
    g.kernel = random_isotropy_kernel(rng, object, n);
    return g;
  };

  for (int t = 0; t < trials; ++t) {
    const int obj = objects[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<int>(objects.size()) - 1))];
    const Morphism a = random_loop(obj);
    const Morphism b = random_loop(obj);
    const Morphism c = random_loop(obj);

    // Associativity, exact on +-1 entries.
    const Morphism ab_c = *compose(*compose(a, b), c);
    const Morphism a_bc = *compose(a, *compose(b, c));
    for (int m = 1; m <= n; ++m) {
      worst = std::max(worst, std::abs(ab_c.kernel.at(m) - a_bc.kernel.at(m)));
    }
    if (ab_c.sign != a_bc.sign) structure_ok = false;

    // Identity is neutral on both sides.
    const Morphism e = identity_morphism(obj, n);
    const Morphism ae = *compose(a, e);
    const Morphism ea = *compose(e, a);
    for (int m = 1; m <= n; ++m) {
      worst = std::max(worst, std::abs(ae.kernel.at(m) - a.kernel.at(m)));
      worst = std::max(worst, std::abs(ea.kernel.at(m) - a.kernel.at(m)));
    }
    if (ae.sign != a.sign || ea.sign != a.sign) structure_ok = false;

    // Unit-modulus morphisms are their own two-sided inverses.
    const Morphism inv = inverse(a);
    const Morphism aia = *compose(a, inv);
    for (int m = 1; m <= n; ++m) {
      worst = std::max(worst, std::abs(aia.kernel.at(m) - 1.0));
    }
    if (aia.sign != 1) structure_ok = false;

    // Partiality: mismatched endpoints refuse to compose.
    const int other = (obj == 0) ? 1 : 0;
    if (compose(random_loop(other), a).has_value()) structure_ok = false;

    // The action respects composition exactly on unit-modulus filters.
    const SpectralField f = random_field(rng, n);
    const SpectralField lhs = apply_morphism(*compose(a, b), f);
    const SpectralField rhs = apply_morphism(a, apply_morphism(b, f));
    if (!exactly_equal(lhs, rhs)) structure_ok = false;
  }

  return {"groupoid-axioms", structure_ok && worst == 0.0, worst, 0.0, trials};
}

CheckReport check_vertex_invariance(int j, int trials, int n_modes,
                                    std::uint64_t seed) {
  Rng rng(seed ^ (0xc2b2ae3d27d4eb4full + static_cast<std::uint64_t>(j)));
  const double tol = 1e-10;
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double lambda = rng.uniform(0.5, 30.0);
    const SpectralField f = random_vertex_field(rng, j, n_modes);
    const SpectralField image = equation_residual(f, lambda);
    worst = std::max(worst, vertex_residual(image, j));
  }
  return {"vertex-invariance-j" + std::to_string(j), worst < tol, worst, tol, trials};
}

CheckReport check_noninvasiveness(int j, double lambda, int trials,
                                  std::uint64_t seed) {
  Rng rng(seed ^ (0xa0761d6478bd642full + static_cast<std::uint64_t>(j)));
  const int n = recommended_truncation(lambda);
  const SpectralField u = find_equilibrium(lambda, j, +1, n);
  const double norm = sobolev_norm(u, 0.0);
  const double tol = 1e-8;
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    FilterKernel h;
    h.h.resize(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) h.h[m] = rng.uniform(-2.0, 2.0);
    for (int l = 1; static_cast<long long>(j) * l <= n; l += 2) h.h[j * l - 1] = 1.0;
    const double invasive = sobolev_norm(apply_filter(h, u) - u, 0.0) / norm;
    worst = std::max(worst, invasive);
  }
  return {"noninvasiveness-j" + std::to_string(j), worst < tol, worst, tol, trials};
}

CheckReport check_no_instability_in_vertex(int j, double lambda) {
  const int n = recommended_truncation(lambda);
  const SpectralField u = find_equilibrium(lambda, j, +1, n);
  const ControlParams uncontrolled{};
  const LinearizationReport rep = spectrum(assemble(u, lambda, uncontrolled, n));

  bool ok = true;
  double worst = 1.0;  // smallest residual among unstable eigenvectors
  for (int i = 0; i < rep.morse_index; ++i) {
    const double res = vertex_residual(rep.eigenvectors[i], j);
    worst = std::min(worst, res);
    if (res <= 0.99) ok = false;
    if (rep.zero_counts[i] > j - 2) ok = false;
  }
  // Nonzero vertex-space members, by contrast, carry at least j-1 zeros.
  Rng rng(0x8ebc6af09c88c6e3ull + static_cast<std::uint64_t>(j));
  for (int t = 0; t < 10; ++t) {
    const SpectralField f = random_vertex_field(rng, j, n);
    if (count_zeros(f) < j - 1) ok = false;
  }
  return {"no-instability-in-vertex-j" + std::to_string(j), ok, 1.0 - worst, 0.01,
          rep.morse_index};
}

CheckReport check_operator_norm(int trials, std::uint64_t seed) {
  const double tol = 1e-12;
  const int n = 48;
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (int t = 0; t < trials; ++t) {
    Rng rng(seed ^ (0x589965cc75374cc3ull + static_cast<std::uint64_t>(t)));
    const FilterKernel h = random_unit_kernel(rng, n);
    const SpectralField f = random_field(rng, n);
    const double denom = sobolev_norm(f, 2.0);
    if (denom == 0.0) continue;
    const double ratio = sobolev_norm(apply_filter(h, f), 2.0) / denom;
    worst = std::max(worst, ratio - 1.0);
  }
  return {"operator-norm", worst <= tol, worst, tol, trials};
}

CheckReport check_eigenfunction_preservation(double b, const FilterKernel& h,
                                             double lambda, int n_modes) {
  ControlParams p;
  p.gain = b;
  p.kernel = h;
  const Eigen::MatrixXd a = assemble(SpectralField::zero(n_modes), lambda, p, n_modes);
  const std::vector<double> mu = theorem_spectrum(lambda, b, h, n_modes);
  double worst = 0.0;
  for (int k = 0; k < n_modes; ++k) {
    for (int m = 0; m < n_modes; ++m) {
      if (k == m) {
        worst = std::max(worst, std::abs(a(k, k) - mu[k]));
      } else {
        worst = std::max(worst, std::abs(a(k, m)));
      }
    }
  }
  return {"eigenfunction-preservation", worst <= 1e-12, worst, 1e-12, n_modes};
}

CheckReport check_reflection_symmetry(int j, double lambda) {
  const int n = recommended_truncation(lambda);
  const SpectralField u = find_equilibrium(lambda, j, +1, n);
  const double sign = (j % 2 == 1) ? 1.0 : -1.0;
  const double res =
      sobolev_norm(reflect(u) - sign * u, 0.0) / sobolev_norm(u, 0.0);
  return {"reflection-symmetry-j" + std::to_string(j), res < 1e-8, res, 1e-8, 1};
}

CheckReport check_semiflow_commutation(int j, double lambda, std::uint64_t seed) {
  Rng rng(seed ^ (0x1d8e4e27c47d124full + static_cast<std::uint64_t>(j)));
  const int n = 64;
  const double tol = 1e-7;

  Morphism g;
  g.source = g.target = j;
  g.sign = -1;
  g.kernel = random_isotropy_kernel(rng, j, n);

  SimConfig cfg;
  cfg.n_modes = n;
  cfg.dt = 1e-3;
  cfg.horizon = 2.0;
  cfg.lambda = lambda;
  cfg.record_every = 500;

  const SpectralField y0 = random_vertex_field(rng, j, n, 0.1);
  const SpectralField target = SpectralField::zero(n);

  cfg.initial = y0;
  const Trajectory plain = simulate(cfg, target);
  cfg.initial = apply_morphism(g, y0);
  const Trajectory flipped = simulate(cfg, target);

  double worst = 0.0;
  for (std::size_t i = 0; i < plain.states.size(); ++i) {
    const SpectralField diff =
        flipped.states[i] - apply_morphism(g, plain.states[i]);
    worst = std::max(worst, sobolev_norm(diff, 0.0));
  }
  return {"semiflow-commutation-j" + std::to_string(j), worst < tol, worst, tol,
          static_cast<int>(plain.states.size())};
}

std::vector<CheckReport> run_all_checks(std::uint64_t seed, int trials,
                                        bool negative_controls) {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  std::vector<CheckReport> out;
  out.push_back(check_groupoid_axioms(seed, trials));
  for (int j = 1; j <= 4; ++j) {
    out.push_back(check_vertex_invariance(j, trials, 64, seed));
  }
  for (int j = 1; j <= 3; ++j) {
    out.push_back(check_noninvasiveness(j, 10.0, trials, seed));
  }
  out.push_back(check_no_instability_in_vertex(2, 10.0));
  out.push_back(check_no_instability_in_vertex(3, 15.0));
  out.push_back(check_operator_norm(std::max(trials, 1000), seed));
  {
    Rng rng(seed ^ 0xd6e8feb86659fd93ull);
    double worst = 0.0;
    bool ok = true;
    for (int t = 0; t < 50; ++t) {
      const double b = rng.uniform(-10.0, 10.0);
      const double lambda = rng.uniform(0.5, 20.0);
      const FilterKernel h = random_unit_kernel(rng, 24);
      const CheckReport r = check_eigenfunction_preservation(b, h, lambda, 24);
      worst = std::max(worst, r.worst_residual);
      ok = ok && r.passed;
    }
    out.push_back({"eigenfunction-preservation", ok, worst, 1e-12, 50});
  }
  for (int j = 1; j <= 4; ++j) {
    out.push_back(check_reflection_symmetry(j, 20.0));
  }
  for (int j = 1; j <= 2; ++j) {
    out.push_back(check_semiflow_commutation(j, 5.0, seed));
  }

  if (negative_controls) {
    // A kernel flipping h_j must be flagged invasive on u_j.
    {
      const int j = 2;
      const double lambda = 10.0;
      const int n = recommended_truncation(lambda);
      const SpectralField u = find_equilibrium(lambda, j, +1, n);
      FilterKernel h = identity_kernel(n);
      h.h[j - 1] = -1.0;
      const double invasive =
          sobolev_norm(apply_filter(h, u) - u, 0.0) / sobolev_norm(u, 0.0);
      out.push_back({"negative-control-invasive-kernel-detected", invasive > 0.1,
                     invasive, 0.1, 1});
    }
    // A field with an out-of-vertex mode must show a nonzero residual.
    {
      SpectralField f = SpectralField::single_mode(1, 1.0, 8) +
                        SpectralField::single_mode(2, 0.5, 8);
      const double res = vertex_residual(equation_residual(f, 10.0), 1);
      out.push_back({"negative-control-vertex-residual-detected", res > 1e-3, res,
                     1e-3, 1});
    }
    // Mismatched endpoints must refuse to compose.
    {
      const Morphism a = identity_morphism(1, 8);
      const Morphism b = identity_morphism(2, 8);
      const bool refused = !compose(a, b).has_value();
      out.push_back({"negative-control-mismatched-composition-refused", refused,
                     refused ? 0.0 : 1.0, 0.5, 1});
    }
  }
  return out;
}

}  // namespace cic
