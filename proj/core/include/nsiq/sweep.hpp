#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsiq/model.hpp"

namespace nsiq {

enum class SweepKind { Detuning, Coupling, Degeneracy };

std::string_view to_string(SweepKind kind);

/// A one-dimensional sweep. `start_khz`/`stop_khz` are ordinary frequencies of
/// the swept parameter: Δ (detuning), Ω = Ω_a = Ω_b (coupling) or δ (degeneracy).
struct SweepSpec {
  SweepKind kind = SweepKind::Detuning;
  ModelParams fixed;
  double start_khz = 0.0;
  double stop_khz = 0.0;
  std::size_t points = 2;
  double horizon_periods = 40.0;
  std::size_t samples = 4096;

  /// Throws ConfigError on start ≥ stop, points < 2, samples < 1024,
  /// horizon_periods < 20 or invalid fixed parameters.
  void validate() const;

  /// Parameter value (kHz) of grid point i.
  double value_khz(std::size_t i) const;

  /// Model parameters at grid point i, before any ξ compensation.
  ModelParams params_at(std::size_t i) const;
};

/// One sweep point. Frequencies are ordinary kHz magnitudes.
struct SweepRow {
  double param_khz = 0.0;
  std::optional<double> omega_eff_numeric_khz;
  std::optional<double> omega_eff_adiabatic_khz;
  bool adiabatic_valid = false;
  std::optional<double> omega_eff_exact_khz;
  std::optional<double> max_aux_prob;
  std::optional<double> xi_khz;
  std::optional<double> delta_eff_residual_khz;
  std::string error;
};

struct SweepResult {
  SweepKind kind = SweepKind::Detuning;
  double epsilon_khz = 0.0;
  std::vector<SweepRow> rows;
};

/// Computes one row; per-point failures are recorded in `error`.
SweepRow run_sweep_point(const SweepSpec& spec, std::size_t index);

/// Runs every grid point, concurrently on `threads` workers (0: NSIQ_THREADS
/// or the hardware concurrency). Rows come back in grid order.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

/// Worker count from NSIQ_THREADS, falling back to the hardware concurrency.
unsigned default_thread_count();

}  // namespace nsiq
