#include "cic/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cic::io {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_field_csv(std::ostream& os, const SpectralField& f) {
  os << "k,a_k\n";
  for (int k = 1; k <= f.truncation(); ++k) {
    os << k << ',' << format_g17(f.coeff(k)) << '\n';
  }
}

namespace {

std::pair<std::string, std::string> split_two(const std::string& line) {
  const auto comma = line.find(',');
  if (comma == std::string::npos) {
    throw std::runtime_error("csv: expected two columns, got '" + line + "'");
  }
  return {line.substr(0, comma), line.substr(comma + 1)};
}

}  // namespace

SpectralField read_field_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("k,a_k", 0) != 0) {
    throw std::runtime_error("field csv: missing `k,a_k` header");
  }
  std::map<int, double> rows;
  int max_k = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto [ks, vs] = split_two(line);
    const int k = std::stoi(ks);
    if (k < 1) throw std::runtime_error("field csv: mode index must be >= 1");
    rows[k] = std::stod(vs);
    max_k = std::max(max_k, k);
  }
  std::vector<double> a(static_cast<std::size_t>(max_k), 0.0);
  for (const auto& [k, v] : rows) a[k - 1] = v;
  return SpectralField(std::move(a));
}

void write_kernel_csv(std::ostream& os, const FilterKernel& k) {
  os << "m,h_m\n";
  for (int m = 1; m <= k.truncation(); ++m) {
    os << m << ',' << format_g17(k.at(m)) << '\n';
  }
  os << "tail_value," << format_g17(k.tail_value) << '\n';
}

FilterKernel read_kernel_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("m,h_m", 0) != 0) {
    throw std::runtime_error("kernel csv: missing `m,h_m` header");
  }
  std::map<int, double> rows;
  int max_m = 0;
  FilterKernel out;
  bool saw_tail = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto [ms, vs] = split_two(line);
    if (ms == "tail_value") {
      out.tail_value = std::stod(vs);
      saw_tail = true;
      continue;
    }
    const int m = std::stoi(ms);
    if (m < 1) throw std::runtime_error("kernel csv: index must be >= 1");
    rows[m] = std::stod(vs);
    max_m = std::max(max_m, m);
  }
  if (!saw_tail) throw std::runtime_error("kernel csv: missing tail_value footer");
  out.h.assign(static_cast<std::size_t>(max_m), out.tail_value);
  for (const auto& [m, v] : rows) out.h[m - 1] = v;
  return out;
}

void write_branch_csv(std::ostream& os, const EquilibriumBranch& branch) {
  const int n = branch.samples.empty() ? 0 : branch.samples.front().field.truncation();
  os << "j,lambda,sign,morse_index";
  for (int k = 1; k <= n; ++k) os << ",a_" << k;
  os << '\n';
  for (const BranchSample& s : branch.samples) {
    os << branch.j << ',' << format_g17(s.lambda) << ',' << s.sign << ','
       << s.morse_index;
    for (int k = 1; k <= n; ++k) os << ',' << format_g17(s.field.coeff(k));
    os << '\n';
  }
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,distance,control_norm\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    os << format_g17(traj.times[i]) << ',' << format_g17(traj.distances[i]) << ','
       << format_g17(traj.control_norms[i]) << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const std::vector<double>& mu) {
  os << "n,mu_n\n";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    os << (i + 1) << ',' << format_g17(mu[i]) << '\n';
  }
}

nlohmann::json report_to_json(const LinearizationReport& rep) {
  return nlohmann::json{{"eigenvalues", rep.eigenvalues},
                        {"morse_index", rep.morse_index},
                        {"margin", rep.margin},
                        {"zero_counts", rep.zero_counts}};
}

nlohmann::json checks_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckReport& r : reports) {
    arr.push_back({{"name", r.name},
                   {"passed", r.passed},
                   {"worst_residual", r.worst_residual},
                   {"tolerance", r.tolerance},
                   {"trials", r.trials}});
  }
  return arr;
}

void write_text_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << contents;
  if (!os) throw std::runtime_error("write failed for " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace cic::io
