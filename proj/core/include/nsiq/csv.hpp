#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "nsiq/propagator.hpp"
#include "nsiq/sweep.hpp"

namespace nsiq {

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

/// Sweep columns:
///   param_khz, omega_eff_numeric_khz, omega_eff_adiabatic_khz, adiabatic_valid,
///   omega_eff_exact_khz, max_aux_prob, xi_khz, delta_eff_residual_khz, error
/// Missing values are empty cells. LF line endings, header always present.
std::size_t export_csv(const SweepResult& result, std::ostream& out);

/// Trace columns: time_us, then p_<label>_prob per basis label, then aux_total_prob.
std::size_t export_csv(const PopulationTrace& trace, std::ostream& out);

/// File variants; throw IoError when the destination cannot be written.
std::size_t export_csv(const SweepResult& result, const std::filesystem::path& destination);
std::size_t export_csv(const PopulationTrace& trace, const std::filesystem::path& destination);

}  // namespace nsiq
