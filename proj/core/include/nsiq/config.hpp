#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "nsiq/basis.hpp"
#include "nsiq/model.hpp"
#include "nsiq/sweep.hpp"

namespace nsiq {

enum class Frame { Rwa, Lab };

/// Time evolution request: population trace on a uniform grid [0, t_max].
struct EvolveSpec {
  ModelParams params;
  Frame frame = Frame::Rwa;
  double t_max = 0.0;  // s
  std::size_t points = 1001;
  double tol = 1e-10;
  BasisLabel initial = BasisLabel::Down0;
};

/// Superposition protocol request; `simulate` switches on the dynamical inversion.
struct ProtocolSpec {
  double theta = 0.0;
  std::optional<ModelParams> simulate;
  std::optional<double> duration;  // s; inversion pulse override
};

using ConfigSpec = std::variant<SweepSpec, EvolveSpec, ProtocolSpec>;

/// Parses a JSON configuration document. Keys are flat and carry their unit
/// (`epsilon_khz`, `phi_a_rad`, `t_max_us`); `kind` selects the request type
/// (detuning | coupling | degeneracy | evolve | protocol). Defaults: ε = 200 kHz,
/// Ω_a = Ω_b = 30 kHz. Unknown keys are rejected. Throws ConfigError whose
/// message starts with the offending key path.
ConfigSpec parse_config(std::string_view text);

/// Configuration documents for the figure presets fig4b, fig5b and fig6.
/// Throws ConfigError for an unknown name.
std::string preset_config(std::string_view name);

/// Resolved configuration as a JSON object (used for sidecar metadata).
std::string describe_config(const ConfigSpec& spec);

}  // namespace nsiq
