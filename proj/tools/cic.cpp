// cic — spectral simulation and feedback control of the Chafee-Infante
// equation u_t = u_xx + lambda u (1 - u^2) on (0, pi) with Dirichlet
// boundary conditions. Subcommands cover bifurcation diagrams, equilibria,
// linearized spectra, time integration, pattern-selective stabilization,
// the executable property-check suite and canned reproduction scenarios.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "cic/equilibria.hpp"
#include "cic/errors.hpp"
#include "cic/io.hpp"
#include "cic/rng.hpp"
#include "cic/stability.hpp"
#include "cic/timestepping.hpp"
#include "cic/verify.hpp"
#include "cic/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cic;

namespace {

constexpr int kExitSolverFailure = 2;
constexpr int kExitInvasive = 3;
constexpr int kExitBlowup = 4;
constexpr int kExitUsage = 64;

struct GlobalOpts {
  int n_modes = 128;
  std::uint64_t seed = 1;
  std::string out_dir;  // empty -> runs/<command>
  std::string lambda_convention = "eigen";
};

std::string now_iso() {
  const std::time_t tt =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&tt));
  return buf;
}

/// Bifurcation value of branch j under the selected convention. The solver
/// itself always uses j^2 (the operator spectrum on (0, pi)); `paper-literal`
/// only changes where commands that derive lambda from j place it.
double convention_lambda(const GlobalOpts& g, int j) {
  if (g.lambda_convention == "eigen") return bifurcation_value(j);
  if (g.lambda_convention == "paper-literal") {
    return static_cast<double>(j) * j * kPi * kPi;
  }
  throw ConfigError("unknown lambda convention '" + g.lambda_convention + "'");
}

/// Output directory plus manifest bookkeeping for one command run.
struct RunContext {
  fs::path dir;
  json manifest;

  RunContext(const std::string& command, const GlobalOpts& g, json parameters) {
    dir = g.out_dir.empty() ? fs::path("runs") / command : fs::path(g.out_dir);
    fs::create_directories(dir);
    manifest["command"] = command;
    manifest["version"] = kVersion;
    manifest["seed"] = g.seed;
    manifest["n_modes"] = g.n_modes;
    manifest["lambda_convention"] = g.lambda_convention;
    manifest["parameters"] = std::move(parameters);
    manifest["started"] = now_iso();
    manifest["outputs"] = json::array();
  }

  void write(const std::string& filename, const std::string& contents) {
    io::write_text_file((dir / filename).string(), contents);
    manifest["outputs"].push_back(filename);
  }

  void finish(const std::string& error = "") {
    manifest["finished"] = now_iso();
    if (!error.empty()) manifest["error"] = error;
    io::write_text_file((dir / "manifest.json").string(), manifest.dump(2) + "\n");
  }
};

FilterKernel make_kernel(const std::string& name, int j, double lambda, int n) {
  if (name == "identity") return identity_kernel(n);
  if (name == "reflection+") return reflection_kernel(+1, n);
  if (name == "reflection-") return reflection_kernel(-1, n);
  if (name == "theorem") return theorem_kernel(lambda, n);
  if (name == "selective") {
    if (j < 1) throw ConfigError("kernel 'selective' needs a branch index j >= 1");
    return selective_kernel(j, lambda, n);
  }
  if (name.rfind("file:", 0) == 0) {
    std::istringstream is(io::read_text_file(name.substr(5)));
    return io::read_kernel_csv(is);
  }
  throw ConfigError("unknown kernel '" + name +
                    "' (expected identity, reflection+, reflection-, theorem, "
                    "selective or file:<path>)");
}

/// Initial-condition grammar: zero | mode:<k>:<amp> | random:<amp> |
/// equilibrium:<j> | equilibrium:<j>:perturb:<k>:<amp> | file:<path>.
SpectralField make_initial(const std::string& spec, int n, double lambda,
                           std::uint64_t seed) {
  auto fields = [&spec] {
    std::vector<std::string> parts;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    return parts;
  }();
  if (spec == "zero") return SpectralField::zero(n);
  if (fields.size() == 3 && fields[0] == "mode") {
    return SpectralField::single_mode(std::stoi(fields[1]), std::stod(fields[2]), n);
  }
  if (fields.size() == 2 && fields[0] == "random") {
    Rng rng(seed);
    const double amp = std::stod(fields[1]);
    std::vector<double> a(static_cast<std::size_t>(n));
    for (double& v : a) v = amp * rng.uniform(-1.0, 1.0);
    return SpectralField(std::move(a));
  }
  if (fields.size() >= 2 && fields[0] == "equilibrium") {
    const int j = std::stoi(fields[1]);
    SpectralField u = find_equilibrium(lambda, j, +1, n);
    if (fields.size() == 5 && fields[2] == "perturb") {
      u = u + SpectralField::single_mode(std::stoi(fields[3]), std::stod(fields[4]), n);
    } else if (fields.size() != 2) {
      throw ConfigError("bad initial spec '" + spec + "'");
    }
    return u;
  }
  if (fields.size() >= 2 && fields[0] == "file") {
    std::istringstream is(io::read_text_file(spec.substr(5)));
    return io::read_field_csv(is);
  }
  throw ConfigError("bad initial spec '" + spec + "'");
}

std::string to_csv(const std::function<void(std::ostream&)>& writer) {
  std::ostringstream ss;
  writer(ss);
  return ss.str();
}

// ---------------------------------------------------------------------------

int cmd_bifurcation(const GlobalOpts& g, double lambda_max, int steps) {
  if (!(lambda_max > 0.0)) throw ConfigError("--lambda-max must be positive");
  if (steps < 2) throw ConfigError("--steps must be >= 2");
  RunContext run("bifurcation", g,
                 {{"lambda_max", lambda_max}, {"steps", steps}});

  std::ostringstream diagram;
  diagram << "lambda,branch_j,sup_norm\n";

  // Trivial branch: Morse index as a function of lambda.
  std::ostringstream trivial;
  trivial << "lambda,morse_index\n";
  const int lambda_samples = 200;
  for (int i = 0; i <= lambda_samples; ++i) {
    const double lam = lambda_max * i / lambda_samples;
    int morse = 0;
    for (int k = 1; k <= g.n_modes; ++k) {
      if (lam - static_cast<double>(k) * k > kTolZero) ++morse;
    }
    trivial << io::format_g17(lam) << ',' << morse << '\n';
    diagram << io::format_g17(lam) << ",0,0\n";
  }
  run.write("trivial_branch.csv", trivial.str());

  std::vector<int> branch_indices;
  for (int j = 1; convention_lambda(g, j) < lambda_max; ++j) branch_indices.push_back(j);

  // Branches are independent; fan them out across worker threads and write
  // in index order afterwards.
  std::vector<EquilibriumBranch> branches(branch_indices.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t bi = 0; bi < branch_indices.size(); ++bi) {
    try {
      const int j = branch_indices[bi];
      const double lj = convention_lambda(g, j);
      const double lambda_from = lj + (lambda_max - lj) / steps;
      branches[bi] = continue_branch(j, lambda_from, lambda_max, steps, g.n_modes);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (const EquilibriumBranch& branch : branches) {
    run.write("branch_" + std::to_string(branch.j) + ".csv",
              to_csv([&](std::ostream& os) { io::write_branch_csv(os, branch); }));
    for (const BranchSample& s : branch.samples) {
      diagram << io::format_g17(s.lambda) << ',' << branch.j << ','
              << io::format_g17(sup_norm(s.field)) << '\n';
    }
  }
  run.write("diagram.csv", diagram.str());
  run.finish();
  return 0;
}

int cmd_equilibrium(const GlobalOpts& g, int j, double lambda, int sign,
                    bool diagnostics) {
  RunContext run("equilibrium", g,
                 {{"j", j}, {"lambda", lambda}, {"sign", sign}});
  const SpectralField u = find_equilibrium(lambda, j, sign, g.n_modes);
  run.write("field.csv",
            to_csv([&](std::ostream& os) { io::write_field_csv(os, u); }));

  const ControlParams uncontrolled{};
  const LinearizationReport rep =
      spectrum(assemble(u, lambda, uncontrolled, g.n_modes));
  json info{{"j", j},
            {"lambda", lambda},
            {"sign", sign},
            {"zero_count", count_zeros(u)},
            {"vertex_residual", vertex_residual(u, j)},
            {"sup_norm", sup_norm(u)},
            {"l2_norm", sobolev_norm(u, 0.0)},
            {"morse_index", rep.morse_index},
            {"margin", rep.margin}};
  if (diagnostics) {
    info["cube_tail_energy"] = cube_with_tail(u).tail_energy;
    info["residual_norm"] = sobolev_norm(equation_residual(u, lambda), 0.0);
  }
  run.write("info.json", info.dump(2) + "\n");
  run.finish();
  return 0;
}

int cmd_spectrum(const GlobalOpts& g, int j, double lambda, double b,
                 const std::string& kernel_name) {
  RunContext run("spectrum", g,
                 {{"j", j}, {"lambda", lambda}, {"b", b}, {"kernel", kernel_name}});
  ControlParams p;
  p.gain = b;
  p.kernel = make_kernel(kernel_name, j, lambda, g.n_modes);
  const SpectralField u =
      (j == 0) ? SpectralField::zero(g.n_modes)
               : find_equilibrium(lambda, j, +1, g.n_modes);
  const LinearizationReport rep = spectrum(assemble(u, lambda, p, g.n_modes));
  run.write("spectrum.csv", to_csv([&](std::ostream& os) {
              io::write_spectrum_csv(os, rep.eigenvalues);
            }));
  run.write("report.json", io::report_to_json(rep).dump(2) + "\n");
  run.finish();
  return 0;
}

int cmd_simulate(const GlobalOpts& g, double lambda, double t_end, double dt,
                 double b, const std::string& kernel_name, int kernel_j,
                 const std::string& initial_spec, const std::string& target_spec,
                 int record_every, bool dump_states) {
  RunContext run("simulate", g,
                 {{"lambda", lambda},
                  {"t_end", t_end},
                  {"dt", dt},
                  {"b", b},
                  {"kernel", kernel_name},
                  {"kernel_j", kernel_j},
                  {"initial", initial_spec},
                  {"target", target_spec},
                  {"record_every", record_every}});
  SimConfig cfg;
  cfg.n_modes = g.n_modes;
  cfg.lambda = lambda;
  cfg.dt = dt;
  cfg.horizon = t_end;
  cfg.record_every = record_every;
  cfg.control.gain = b;
  cfg.control.kernel = make_kernel(kernel_name, kernel_j, lambda, g.n_modes);
  cfg.initial = make_initial(initial_spec, g.n_modes, lambda, g.seed);
  cfg.initial_spec = initial_spec;
  const SpectralField target = make_initial(target_spec, g.n_modes, lambda, g.seed);

  try {
    const Trajectory traj = simulate(cfg, target);
    run.write("trajectory.csv", to_csv([&](std::ostream& os) {
                io::write_trajectory_csv(os, traj);
              }));
    if (dump_states) {
      for (std::size_t i = 0; i < traj.states.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "state_%05zu.csv", i);
        run.write(name, to_csv([&](std::ostream& os) {
                    io::write_field_csv(os, traj.states[i]);
                  }));
      }
    }
    run.finish();
  } catch (const Blowup& e) {
    run.finish(e.what());
    throw;
  }
  return 0;
}

int cmd_stabilize(const GlobalOpts& g, int j, double lambda, double b,
                  const std::string& kernel_name, double t_end, double dt,
                  double perturb_amp) {
  RunContext run("stabilize", g,
                 {{"j", j},
                  {"lambda", lambda},
                  {"b", b},
                  {"kernel", kernel_name},
                  {"t_end", t_end},
                  {"dt", dt},
                  {"perturb_amp", perturb_amp}});
  try {
    const SpectralField u = find_equilibrium(lambda, j, +1, g.n_modes);
    run.write("equilibrium.csv",
              to_csv([&](std::ostream& os) { io::write_field_csv(os, u); }));

    const ControlParams uncontrolled{};
    const StabilityVerdict plain = verdict(u, lambda, uncontrolled, g.n_modes);

    ControlParams p;
    p.gain = b;
    p.kernel = make_kernel(kernel_name, j, lambda, g.n_modes);
    const StabilityVerdict controlled = verdict(u, lambda, p, g.n_modes);

    const LinearizationReport rep = spectrum(assemble(u, lambda, p, g.n_modes));
    run.write("spectrum.csv", to_csv([&](std::ostream& os) {
                io::write_spectrum_csv(os, rep.eigenvalues);
              }));

    SimConfig cfg;
    cfg.n_modes = g.n_modes;
    cfg.lambda = lambda;
    cfg.dt = dt;
    cfg.horizon = t_end;
    cfg.record_every = std::max(1, static_cast<int>(std::llround(0.1 / dt)));
    cfg.control = p;
    cfg.initial = u + SpectralField::single_mode(1, perturb_amp, g.n_modes);
    cfg.initial_spec = "equilibrium:" + std::to_string(j) + ":perturb:1:" +
                       io::format_g17(perturb_amp);
    const Trajectory traj = simulate(cfg, u);
    run.write("trajectory.csv", to_csv([&](std::ostream& os) {
                io::write_trajectory_csv(os, traj);
              }));

    // Fit the decay rate over the span where the distance is still above
    // the numerical floor.
    double rate = std::numeric_limits<double>::quiet_NaN();
    double fit_end = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      if (traj.distances[i] > 1e-12) fit_end = traj.times[i];
    }
    try {
      rate = measure_decay_rate(traj, 0.0, fit_end);
    } catch (const DegenerateWindow&) {
    }

    const double final_distance = traj.distances.back();
    const double final_control = traj.control_norms.back();
    const bool stabilized =
        controlled.stable && final_distance < 1e-6 && final_control < 1e-8;

    json summary{{"stabilized", stabilized},
                 {"margin", controlled.margin},
                 {"measured_rate", rate},
                 {"uncontrolled",
                  {{"stable", plain.stable},
                   {"morse_index", plain.morse_index},
                   {"margin", plain.margin}}},
                 {"final_distance", final_distance},
                 {"final_control_norm", final_control}};
    run.write("summary.json", summary.dump(2) + "\n");
    run.finish();

    std::cout << (stabilized ? "stabilized" : "not stabilized")
              << " (margin " << controlled.margin << ")\n";
    return stabilized ? 0 : 1;
  } catch (const std::exception& e) {
    run.finish(e.what());
    throw;
  }
}

int cmd_verify(const GlobalOpts& g, int trials, bool negative_controls) {
  RunContext run("verify", g,
                 {{"trials", trials}, {"negative_controls", negative_controls}});
  const std::vector<CheckReport> reports =
      run_all_checks(g.seed, trials, negative_controls);
  run.write("checks.json", io::checks_to_json(reports).dump(2) + "\n");
  run.finish();

  bool all = true;
  std::printf("%-45s %-6s %-13s %s\n", "check", "status", "worst", "trials");
  for (const CheckReport& r : reports) {
    std::printf("%-45s %-6s %-13.3e %d\n", r.name.c_str(),
                r.passed ? "pass" : "FAIL", r.worst_residual, r.trials);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

int cmd_reproduce(const GlobalOpts& g, const std::string& target) {
  RunContext run("reproduce", g, {{"target", target}});
  if (target == "fig1") {
    const double lambda = 10.0;
    for (int j = 1; j <= 3; ++j) {
      const SpectralField u = find_equilibrium(lambda, j, +1, g.n_modes);
      std::ostringstream modes;
      modes << "k,a_k\n";
      for (int k = 1; k <= 9; ++k) {
        modes << k << ',' << io::format_g17(u.coeff(k)) << '\n';
      }
      run.write("u" + std::to_string(j) + "_modes.csv", modes.str());
      run.write("u" + std::to_string(j) + "_field.csv",
                to_csv([&](std::ostream& os) { io::write_field_csv(os, u); }));
      const GridSamples prof = synthesize(u, 256);
      std::ostringstream pf;
      pf << "x,u\n";
      for (int i = 0; i < prof.size(); ++i) {
        pf << io::format_g17(prof.x(i)) << ',' << io::format_g17(prof.values[i])
           << '\n';
      }
      run.write("u" + std::to_string(j) + "_profile.csv", pf.str());
    }
    run.finish();
    return 0;
  }
  if (target == "fig2") {
    GlobalOpts nested = g;
    nested.out_dir = (run.dir / "fig2").string();
    run.finish();
    return cmd_bifurcation(nested, 10.0, 40);
  }
  if (target == "theorem") {
    for (int j = 1; j <= 4; ++j) {
      const double lj = convention_lambda(g, j);
      const double b = -lj / 2.0 - 1.0;
      for (const std::string name : {"theorem", "selective"}) {
        const FilterKernel h = make_kernel(name, j, lj, g.n_modes);
        const std::vector<double> mu = theorem_spectrum(lj, b, h, g.n_modes);
        run.write("mu_j" + std::to_string(j) + "_" + name + ".csv",
                  to_csv([&](std::ostream& os) { io::write_spectrum_csv(os, mu); }));
      }
    }
    run.finish();
    return 0;
  }
  throw ConfigError("unknown reproduce target '" + target +
                    "' (expected fig1, fig2 or theorem)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral simulation and convolution-filter feedback control of "
               "the Chafee-Infante equation on (0, pi)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value configuration file; explicit "
                                 "command-line flags win");

  GlobalOpts g;
  app.add_option("--n-modes", g.n_modes, "Spectral truncation")
      ->check(CLI::Range(8, 4096))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "Output directory (default runs/<command>)");
  app.add_option("--lambda-convention", g.lambda_convention,
                 "Where commands place the bifurcation values lambda_j")
      ->check(CLI::IsMember({"eigen", "paper-literal"}))
      ->capture_default_str();

  int exit_code = 0;
  auto set_exit = [&exit_code](int c) { exit_code = c; };

  // bifurcation
  {
    auto* sub = app.add_subcommand("bifurcation",
                                   "Continue all branches below lambda-max");
    auto lambda_max = std::make_shared<double>(10.0);
    auto steps = std::make_shared<int>(32);
    sub->add_option("--lambda-max", *lambda_max, "Upper end of the diagram")
        ->required();
    sub->add_option("--steps", *steps, "Samples per branch")->capture_default_str();
    sub->callback([&, lambda_max, steps] {
      set_exit(cmd_bifurcation(g, *lambda_max, *steps));
    });
  }
  // equilibrium
  {
    auto* sub = app.add_subcommand("equilibrium", "Compute one equilibrium");
    auto j = std::make_shared<int>(1);
    auto lambda = std::make_shared<double>(0.0);
    auto sign = std::make_shared<int>(1);
    auto diagnostics = std::make_shared<bool>(false);
    sub->add_option("--j", *j, "Branch index")->required()->check(CLI::PositiveNumber);
    sub->add_option("--lambda", *lambda, "Parameter value")->required();
    sub->add_option("--sign", *sign, "Branch sign")->check(CLI::IsMember({-1, 1}));
    sub->add_flag("--diagnostics", *diagnostics, "Include tail-energy diagnostics");
    sub->callback([&, j, lambda, sign, diagnostics] {
      set_exit(cmd_equilibrium(g, *j, *lambda, *sign, *diagnostics));
    });
  }
  // spectrum
  {
    auto* sub = app.add_subcommand("spectrum",
                                   "Eigenvalues of the (controlled) linearization");
    auto j = std::make_shared<int>(0);
    auto lambda = std::make_shared<double>(0.0);
    auto b = std::make_shared<double>(0.0);
    auto kernel = std::make_shared<std::string>("identity");
    sub->add_option("--j", *j, "Branch index (0 = trivial equilibrium)");
    sub->add_option("--lambda", *lambda, "Parameter value")->required();
    sub->add_option("--b", *b, "Feedback gain")->capture_default_str();
    sub->add_option("--kernel", *kernel, "Filter kernel name")->capture_default_str();
    sub->callback([&, j, lambda, b, kernel] {
      set_exit(cmd_spectrum(g, *j, *lambda, *b, *kernel));
    });
  }
  // simulate
  {
    auto* sub = app.add_subcommand("simulate", "Integrate the controlled equation");
    auto lambda = std::make_shared<double>(0.0);
    auto t_end = std::make_shared<double>(10.0);
    auto dt = std::make_shared<double>(1e-3);
    auto b = std::make_shared<double>(0.0);
    auto kernel = std::make_shared<std::string>("identity");
    auto kernel_j = std::make_shared<int>(0);
    auto initial = std::make_shared<std::string>("zero");
    auto target = std::make_shared<std::string>("zero");
    auto record_every = std::make_shared<int>(100);
    auto dump_states = std::make_shared<bool>(false);
    auto tau = std::make_shared<double>(0.0);
    sub->add_option("--lambda", *lambda, "Parameter value")->required();
    sub->add_option("--t-end", *t_end, "Horizon")->capture_default_str();
    sub->add_option("--dt", *dt, "Time step")->capture_default_str();
    sub->add_option("--b", *b, "Feedback gain")->capture_default_str();
    sub->add_option("--kernel", *kernel, "Filter kernel name")->capture_default_str();
    sub->add_option("--kernel-j", *kernel_j, "Branch index for the selective kernel");
    sub->add_option("--initial", *initial, "Initial condition spec")
        ->capture_default_str();
    sub->add_option("--target", *target, "Distance reference spec")
        ->capture_default_str();
    sub->add_option("--record-every", *record_every, "Snapshot stride")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--tau", *tau, "Feedback delay (must be 0)");
    sub->add_flag("--dump-states", *dump_states, "Write per-snapshot coefficients");
    sub->callback([&, lambda, t_end, dt, b, kernel, kernel_j, initial, target,
                   record_every, dump_states, tau] {
      if (*tau != 0.0) {
        throw ConfigError("delayed feedback (tau != 0) is not supported");
      }
      set_exit(cmd_simulate(g, *lambda, *t_end, *dt, *b, *kernel, *kernel_j,
                            *initial, *target, *record_every, *dump_states));
    });
  }
  // stabilize
  {
    auto* sub = app.add_subcommand("stabilize",
                                   "Compute u_j, verdicts and a perturbed run");
    auto j = std::make_shared<int>(1);
    auto lambda = std::make_shared<double>(0.0);
    auto b = std::make_shared<double>(0.0);
    auto kernel = std::make_shared<std::string>("selective");
    auto t_end = std::make_shared<double>(200.0);
    auto dt = std::make_shared<double>(1e-3);
    auto amp = std::make_shared<double>(0.01);
    sub->add_option("--j", *j, "Branch index")->required()->check(CLI::PositiveNumber);
    sub->add_option("--lambda", *lambda, "Parameter value")->required();
    sub->add_option("--b", *b, "Feedback gain")->required();
    sub->add_option("--kernel", *kernel, "Filter kernel name")->capture_default_str();
    sub->add_option("--t-end", *t_end, "Horizon")->capture_default_str();
    sub->add_option("--dt", *dt, "Time step")->capture_default_str();
    sub->add_option("--perturb-amp", *amp, "Initial sin(x) perturbation amplitude")
        ->capture_default_str();
    sub->callback([&, j, lambda, b, kernel, t_end, dt, amp] {
      set_exit(cmd_stabilize(g, *j, *lambda, *b, *kernel, *t_end, *dt, *amp));
    });
  }
  // verify
  {
    auto* sub = app.add_subcommand("verify", "Run the executable property checks");
    auto trials = std::make_shared<int>(100);
    auto negative = std::make_shared<bool>(false);
    sub->add_option("--trials", *trials, "Randomized trials per check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--negative-controls", *negative,
                  "Also confirm that violated inputs are detected");
    sub->callback(
        [&, trials, negative] { set_exit(cmd_verify(g, *trials, *negative)); });
  }
  // reproduce
  {
    auto* sub = app.add_subcommand("reproduce", "Canned output scenarios");
    auto target = std::make_shared<std::string>();
    sub->add_option("--target", *target, "fig1 | fig2 | theorem")->required();
    sub->callback([&, target] { set_exit(cmd_reproduce(g, *target)); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvasiveControl& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvasive;
  } catch (const Blowup& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBlowup;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolverFailure;
  }
  return exit_code;
}
