#include "nsiq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "nsiq/effective.hpp"
#include "nsiq/errors.hpp"
#include "nsiq/propagator.hpp"
#include "nsiq/units.hpp"

namespace nsiq {
namespace {

bool on_block_manifold(const ModelParams& p) {
  auto close = [&](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), p.epsilon});
  };
  return std::abs(p.delta) <= 1e-12 * p.epsilon && close(p.omega_a, p.omega_b) &&
         close(p.delta_a, p.delta_b);
}

void append_error(std::string& field, const std::string& message) {
  if (!field.empty()) field += "; ";
  field += message;
}

// Largest eigenvalue gap of the RWA Hamiltonian bounds the fastest population beat.
double fastest_beat(const ModelParams& p) {
  const double drive = std::max(p.omega_a, p.omega_b);
  const double spread = std::max({std::abs(p.delta_a), std::abs(p.delta_b), std::abs(p.delta)});
  return 2.0 * (p.epsilon + drive + spread);
}

}  // namespace

std::string_view to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::Detuning: return "detuning";
    case SweepKind::Coupling: return "coupling";
    case SweepKind::Degeneracy: return "degeneracy";
  }
  return "unknown";
}

void SweepSpec::validate() const {
  fixed.validate();
  if (!std::isfinite(start_khz)) throw ConfigError("start_khz", "must be finite");
  if (!std::isfinite(stop_khz)) throw ConfigError("stop_khz", "must be finite");
  if (points < 2) throw ConfigError("points", "must be >= 2");
  if (!(stop_khz > start_khz)) throw ConfigError("stop_khz", "must exceed start_khz");
  if (!(horizon_periods >= 20.0) || !std::isfinite(horizon_periods))
    throw ConfigError("horizon_periods", "must be >= 20");
  if (samples < 1024) throw ConfigError("samples", "must be >= 1024");
  if (kind == SweepKind::Coupling && start_khz < 0.0) throw ConfigError("start_khz", "drive strength must be >= 0");
}

double SweepSpec::value_khz(std::size_t i) const {
  if (i >= points) throw PreconditionError("SweepSpec: index out of range");
  return start_khz + (stop_khz - start_khz) * static_cast<double>(i) / static_cast<double>(points - 1);
}

ModelParams SweepSpec::params_at(std::size_t i) const {
  const double value = khz_to_rad_s(value_khz(i));
  ModelParams p = fixed;
  p.carriers.reset();
  switch (kind) {
    case SweepKind::Detuning:
      p.delta = 0.0;
      p.delta_a = p.delta_b = value;
      break;
    case SweepKind::Coupling:
      p.delta = 0.0;
      p.delta_a = p.delta_b = 0.0;
      p.omega_a = p.omega_b = value;
      break;
    case SweepKind::Degeneracy:
      p.delta = value;
      p.delta_a = -0.5 * value;
      p.delta_b = 0.5 * value;
      break;
  }
  return p;
}

SweepRow run_sweep_point(const SweepSpec& spec, std::size_t index) {
  SweepRow row;
  row.param_khz = spec.value_khz(index);
  ModelParams p = spec.params_at(index);

  try {
    if (spec.kind == SweepKind::Degeneracy) {
      const DetuningCompensation comp = compensate_detuning(p.epsilon, p.delta, p.omega_a, p.omega_b);
      p = apply_compensation(p, comp.xi);
      row.xi_khz = rad_s_to_khz(comp.xi);
      row.delta_eff_residual_khz = rad_s_to_khz(comp.residual);
    }
  } catch (const std::exception& e) {
    append_error(row.error, e.what());
    return row;
  }

  const bool block = on_block_manifold(p);
  std::optional<EffectivePair> adiabatic;
  try {
    adiabatic = adiabatic_effective(p);
    row.omega_eff_adiabatic_khz = rad_s_to_khz(std::abs(adiabatic->omega_eff));
    row.adiabatic_valid = adiabatic->valid;
  } catch (const DomainError& e) {
    append_error(row.error, e.what());
  }

  double expected = 0.0;
  if (block) {
    expected = lowest_transition(p);
    row.omega_eff_exact_khz = rad_s_to_khz(expected);
  } else if (adiabatic) {
    expected = std::hypot(adiabatic->omega_eff, adiabatic->delta_eff);
  }
  if (!(expected > 0.0)) {
    row.omega_eff_numeric_khz = 0.0;
    row.max_aux_prob = max_aux_occupation(p, 1.0 / p.epsilon, 1024);
    append_error(row.error, "no coherent transfer detected");
    return row;
  }

  try {
    const double period = 2.0 * std::numbers::pi / expected;
    const CouplingEstimate est = extract_effective_coupling(p, spec.horizon_periods * period, spec.samples);
    row.omega_eff_numeric_khz = rad_s_to_khz(est.omega_eff);
    if (!est.coherent) append_error(row.error, "no coherent transfer detected");

    // Two coupling periods cover the first full excursion into the auxiliary states.
    const double aux_horizon = 2.0 * period;
    const double needed = 20.0 * aux_horizon * fastest_beat(p) / (2.0 * std::numbers::pi);
    const auto aux_samples = static_cast<std::size_t>(std::clamp(needed, 2048.0, 1048576.0));
    row.max_aux_prob = max_aux_occupation(p, aux_horizon, aux_samples);
  } catch (const std::exception& e) {
    append_error(row.error, e.what());
  }
  return row;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("NSIQ_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  SweepResult result;
  result.kind = spec.kind;
  result.epsilon_khz = rad_s_to_khz(spec.fixed.epsilon);
  result.rows.resize(spec.points);

  const unsigned workers = std::min<unsigned>(threads == 0 ? default_thread_count() : threads,
                                              static_cast<unsigned>(spec.points));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < spec.points; i = next++) {
      try {
        result.rows[i] = run_sweep_point(spec, i);
      } catch (const std::exception& e) {
        result.rows[i].param_khz = spec.value_khz(i);
        result.rows[i].error = e.what();
      }
    }
  };
  if (workers <= 1) {
    work();
    return result;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();
  return result;
}

}  // namespace nsiq
