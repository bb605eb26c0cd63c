#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cic/control.hpp"
#include "cic/equilibria.hpp"
#include "cic/field.hpp"
#include "cic/stability.hpp"
#include "cic/timestepping.hpp"
#include "cic/verify.hpp"

namespace cic::io {

/// 17-significant-digit decimal formatting; round-trips any double exactly.
std::string format_g17(double v);

// SpectralField CSV: header `k,a_k`, one row per mode.
void write_field_csv(std::ostream& os, const SpectralField& f);
SpectralField read_field_csv(std::istream& is);

// FilterKernel CSV: header `m,h_m`, rows, then a `tail_value,<v>` footer.
void write_kernel_csv(std::ostream& os, const FilterKernel& k);
FilterKernel read_kernel_csv(std::istream& is);

// Branch CSV: `j,lambda,sign,morse_index,a_1,...,a_N`.
void write_branch_csv(std::ostream& os, const EquilibriumBranch& branch);

// Trajectory CSV: `t,distance,control_norm`.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

// Spectrum CSV: `n,mu_n`.
void write_spectrum_csv(std::ostream& os, const std::vector<double>& mu);

nlohmann::json report_to_json(const LinearizationReport& rep);
nlohmann::json checks_to_json(const std::vector<CheckReport>& reports);

// File helpers (create parent directories, fail loudly).
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace cic::io
