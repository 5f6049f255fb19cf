// nsiq: command-line front end for the four-level NSI qubit simulator.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsiq/config.hpp"
#include "nsiq/csv.hpp"
#include "nsiq/effective.hpp"
#include "nsiq/errors.hpp"
#include "nsiq/gates.hpp"
#include "nsiq/hamiltonians.hpp"
#include "nsiq/propagator.hpp"
#include "nsiq/units.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

constexpr const char* kVersion = "0.1.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nsiq::ConfigError("--config", "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

nsiq::ConfigSpec load(const std::string& config_path, const std::string& preset) {
  if (!config_path.empty() && !preset.empty())
    throw nsiq::ConfigError("--preset", "give either --config or --preset, not both");
  if (!preset.empty()) return nsiq::parse_config(nsiq::preset_config(preset));
  if (config_path.empty()) throw nsiq::ConfigError("--config", "required (or --preset)");
  return nsiq::parse_config(read_file(config_path));
}

std::filesystem::path sidecar_path(const std::filesystem::path& out) {
  return std::filesystem::path(out.string() + ".meta.json");
}

void write_sidecar(const std::filesystem::path& out, ordered_json meta) {
  const auto path = sidecar_path(out);
  std::ofstream file(path, std::ios::binary);
  file << meta.dump(2) << '\n';
  if (!file) throw nsiq::IoError("cannot write sidecar '" + path.string() + "'");
}

ordered_json base_meta(const nsiq::ConfigSpec& spec, double epsilon, std::string_view kind) {
  ordered_json meta;
  meta["generator"] = std::string("nsiq ") + kVersion;
  meta["kind"] = std::string(kind);
  meta["epsilon_khz"] = nsiq::rad_s_to_khz(epsilon);
  meta["config"] = ordered_json::parse(nsiq::describe_config(spec));
  return meta;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_sweep_command(const std::string& config, const std::string& preset, const std::string& out,
                      unsigned threads) {
  const nsiq::ConfigSpec spec = load(config, preset);
  const auto* sweep = std::get_if<nsiq::SweepSpec>(&spec);
  if (sweep == nullptr) throw nsiq::ConfigError("kind", "sweep expects detuning, coupling or degeneracy");

  const auto start = std::chrono::steady_clock::now();
  const nsiq::SweepResult result = nsiq::run_sweep(*sweep, threads);
  const double elapsed = seconds_since(start);
  nsiq::export_csv(result, std::filesystem::path(out));

  std::size_t failed = 0;
  for (const auto& row : result.rows) failed += row.error.empty() ? 0 : 1;
  ordered_json meta = base_meta(spec, sweep->fixed.epsilon, nsiq::to_string(sweep->kind));
  meta["rows"] = result.rows.size();
  meta["rows_with_error"] = failed;
  meta["threads"] = threads == 0 ? nsiq::default_thread_count() : threads;
  meta["elapsed_s"] = elapsed;
  write_sidecar(out, meta);
  std::cout << "wrote " << result.rows.size() << " rows (" << failed << " with error) to " << out << '\n';
  return kExitOk;
}

int run_evolve_command(const std::string& config, const std::string& out) {
  const nsiq::ConfigSpec spec = load(config, "");
  const auto* ev = std::get_if<nsiq::EvolveSpec>(&spec);
  if (ev == nullptr) throw nsiq::ConfigError("kind", "evolve expects kind = evolve");

  std::vector<double> times(ev->points);
  for (std::size_t i = 0; i < ev->points; ++i)
    times[i] = ev->t_max * static_cast<double>(i) / static_cast<double>(ev->points - 1);
  const auto psi0 = nsiq::StateVector::basis_state(nsiq::kPhysicalBasis, ev->initial);

  const auto start = std::chrono::steady_clock::now();
  std::vector<nsiq::StateVector> states;
  nsiq::LabStats stats;
  if (ev->frame == nsiq::Frame::Lab) {
    states = nsiq::evolve_lab(ev->params, psi0, times, ev->tol, &stats);
  } else {
    states = nsiq::evolve_rwa(nsiq::build_rwa_hamiltonian(ev->params), psi0, times);
  }
  const double elapsed = seconds_since(start);
  const nsiq::PopulationTrace trace = nsiq::populations(states, times);
  nsiq::export_csv(trace, std::filesystem::path(out));

  ordered_json meta = base_meta(spec, ev->params.epsilon, "evolve");
  meta["rows"] = trace.size();
  if (ev->frame == nsiq::Frame::Lab) {
    meta["accepted_steps"] = stats.accepted_steps;
    meta["rejected_steps"] = stats.rejected_steps;
    meta["max_norm_drift"] = stats.max_norm_drift;
  }
  meta["elapsed_s"] = elapsed;
  write_sidecar(out, meta);
  std::cout << "wrote " << trace.size() << " samples to " << out << '\n';
  return kExitOk;
}

std::string format_amplitude(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.12f%+.12fi", z.real(), z.imag());
  return buf;
}

int run_protocol_command(std::optional<double> theta, const std::string& config) {
  nsiq::ProtocolSpec spec;
  if (!config.empty()) {
    const nsiq::ConfigSpec parsed = load(config, "");
    const auto* p = std::get_if<nsiq::ProtocolSpec>(&parsed);
    if (p == nullptr) throw nsiq::ConfigError("kind", "protocol expects kind = protocol");
    spec = *p;
  } else if (!theta) {
    throw nsiq::ConfigError("--theta-rad", "required (or --config)");
  }
  if (theta) spec.theta = *theta;
  if (!std::isfinite(spec.theta)) throw nsiq::ConfigError("--theta-rad", "must be finite");

  static constexpr const char* kLabels[] = {"a0", "down0", "down2"};
  std::cout << "theta_rad " << nsiq::format_double(spec.theta) << '\n';
  for (const auto& step : nsiq::superposition_protocol_steps(spec.theta)) {
    std::cout << step.name << '\n';
    for (int i = 0; i < 3; ++i)
      std::cout << "  " << kLabels[i] << ' ' << format_amplitude(step.state.amplitudes(i)) << '\n';
  }
  const auto target = nsiq::superposition_protocol(spec.theta).amplitudes;
  std::cout << "target";
  for (int i = 0; i < 3; ++i) std::cout << ' ' << format_amplitude(target(i));
  std::cout << '\n';

  if (spec.simulate) {
    const auto sim = nsiq::simulated_superposition_protocol(spec.theta, *spec.simulate, spec.duration);
    static constexpr const char* kFull[] = {"a0", "up0", "down0", "up2", "down2"};
    std::cout << "simulated inversion_duration_us " << nsiq::format_double(nsiq::s_to_us(sim.duration)) << '\n';
    for (int i = 0; i < 5; ++i)
      std::cout << "  " << kFull[i] << ' ' << format_amplitude(sim.amplitudes(i)) << '\n';
    std::cout << "fidelity " << nsiq::format_double(sim.fidelity) << '\n';
    std::cout << "population_fidelity " << nsiq::format_double(sim.population_fidelity) << '\n';
    std::cout << "aux_leakage " << nsiq::format_double(sim.aux_leakage) << '\n';
  }
  return kExitOk;
}

ordered_json spectrum_of(const nsiq::ModelParams& p) {
  ordered_json out;
  std::vector<double> levels;
  for (double e : nsiq::build_rwa_hamiltonian(p).eigenvalues()) levels.push_back(nsiq::rad_s_to_khz(e));
  out["eigenvalues_khz"] = levels;
  std::vector<double> gaps;
  for (double g : nsiq::exact_transition_frequencies(p)) gaps.push_back(nsiq::rad_s_to_khz(g));
  out["transitions_khz"] = gaps;
  out["lowest_transition_khz"] = nsiq::rad_s_to_khz(nsiq::lowest_transition(p));
  try {
    const auto eff = nsiq::adiabatic_effective(p);
    out["omega_eff_adiabatic_khz"] = nsiq::rad_s_to_khz(std::abs(eff.omega_eff));
    out["delta_eff_adiabatic_khz"] = nsiq::rad_s_to_khz(eff.delta_eff);
    out["adiabatic_valid"] = eff.valid;
  } catch (const nsiq::DomainError& e) {
    out["adiabatic_error"] = e.what();
  }
  return out;
}

int run_spectrum_command(const std::string& config, const std::string& preset) {
  const nsiq::ConfigSpec spec = load(config, preset);
  ordered_json out;
  if (const auto* sweep = std::get_if<nsiq::SweepSpec>(&spec)) {
    out["kind"] = std::string(nsiq::to_string(sweep->kind));
    out["points"] = ordered_json::array();
    for (std::size_t i = 0; i < sweep->points; ++i) {
      ordered_json point;
      point["param_khz"] = sweep->value_khz(i);
      point.update(spectrum_of(sweep->params_at(i)));
      out["points"].push_back(point);
    }
  } else if (const auto* ev = std::get_if<nsiq::EvolveSpec>(&spec)) {
    out["kind"] = "evolve";
    out.update(spectrum_of(ev->params));
  } else {
    const auto& pr = std::get<nsiq::ProtocolSpec>(spec);
    if (!pr.simulate) throw nsiq::ConfigError("simulate", "spectrum needs model parameters (simulate = true)");
    out["kind"] = "protocol";
    out.update(spectrum_of(*pr.simulate));
  }
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-level NSI qubit simulator"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(0, 1);

  std::string top_preset;
  app.add_option("--preset", top_preset, "Print a figure preset configuration (fig4b, fig5b, fig6)");

  std::string config, preset, out;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write a CSV");
  sweep->add_option("--config", config, "Configuration file (JSON)");
  sweep->add_option("--preset", preset, "Figure preset instead of --config");
  sweep->add_option("--out", out, "Output CSV path")->required();
  sweep->add_option("--threads", threads, "Worker threads (default: NSIQ_THREADS or all cores)");

  auto* evolve = app.add_subcommand("evolve", "Time-evolve a state and write a population trace CSV");
  evolve->add_option("--config", config, "Configuration file (JSON)")->required();
  evolve->add_option("--out", out, "Output CSV path")->required();

  std::optional<double> theta;
  auto* protocol = app.add_subcommand("protocol", "Print the superposition protocol for an angle");
  protocol->add_option("--theta-rad", theta, "Target superposition angle (rad)");
  protocol->add_option("--config", config, "Protocol configuration (JSON)");

  auto* spectrum = app.add_subcommand("spectrum", "Print eigenvalues and transition frequencies");
  spectrum->add_option("--config", config, "Configuration file (JSON)");
  spectrum->add_option("--preset", preset, "Figure preset instead of --config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*sweep) return run_sweep_command(config, preset, out, threads);
    if (*evolve) return run_evolve_command(config, out);
    if (*protocol) return run_protocol_command(theta, config);
    if (*spectrum) return run_spectrum_command(config, preset);
    if (!top_preset.empty()) {
      std::cout << nsiq::preset_config(top_preset);
      return kExitOk;
    }
    std::cout << app.help();
    return kExitConfig;
  } catch (const nsiq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nsiq::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const nsiq::DomainError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const nsiq::PreconditionError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const nsiq::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
