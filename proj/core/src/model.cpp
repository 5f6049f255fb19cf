#include "nsiq/model.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>

#include "nsiq/errors.hpp"

namespace nsiq {
namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ConfigError(name, "must be finite");
}

bool close_relative(double a, double b, double scale) {
  return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), scale});
}

}  // namespace

void ModelParams::validate(bool allow_zero_epsilon) const {
  require_finite(epsilon, "epsilon");
  require_finite(delta, "delta");
  require_finite(omega_a, "omega_a");
  require_finite(omega_b, "omega_b");
  require_finite(delta_a, "delta_a");
  require_finite(delta_b, "delta_b");
  require_finite(phi_a, "phi_a");
  require_finite(phi_b, "phi_b");
  if (allow_zero_epsilon ? epsilon < 0.0 : !(epsilon > 0.0))
    throw ConfigError("epsilon", allow_zero_epsilon ? "must be >= 0" : "must be > 0");
  if (omega_a < 0.0) throw ConfigError("omega_a", "must be >= 0");
  if (omega_b < 0.0) throw ConfigError("omega_b", "must be >= 0");

  if (!carriers) return;
  const Carriers& c = *carriers;
  for (const auto& [v, name] : {std::pair{c.omega_up0, "carriers.omega_up0"},
                                {c.omega_down0, "carriers.omega_down0"},
                                {c.omega_up2, "carriers.omega_up2"},
                                {c.omega_down2, "carriers.omega_down2"},
                                {c.omega_field_a, "carriers.omega_field_a"},
                                {c.omega_field_b, "carriers.omega_field_b"}})
    require_finite(v, name);
  if (!(c.omega_field_a > 0.0)) throw ConfigError("carriers.omega_field_a", "must be > 0");
  if (!(c.omega_field_b > 0.0)) throw ConfigError("carriers.omega_field_b", "must be > 0");
  const double scale = std::max({epsilon, omega_a, omega_b, 1.0});
  if (!close_relative(delta_a, c.omega_field_a - (c.omega_up0 - c.omega_down0), scale))
    throw ConfigError("carriers.omega_field_a", "inconsistent with delta_a");
  if (!close_relative(delta_b, c.omega_field_b - (c.omega_up2 - c.omega_down2), scale))
    throw ConfigError("carriers.omega_field_b", "inconsistent with delta_b");
  if (!close_relative(delta, c.omega_up0 - c.omega_up2, scale))
    throw ConfigError("carriers", "level energies inconsistent with delta");
}

const Carriers& ModelParams::require_carriers() const {
  if (!carriers) throw ConfigError("carriers", "lab-frame operation requires carriers");
  return *carriers;
}

Carriers make_carriers(const ModelParams& params, double transition_frequency) {
  Carriers c;
  c.omega_down0 = 0.0;
  c.omega_down2 = 0.0;
  c.omega_up0 = transition_frequency + 0.5 * params.delta;
  c.omega_up2 = transition_frequency - 0.5 * params.delta;
  c.omega_field_a = c.omega_up0 - c.omega_down0 + params.delta_a;
  c.omega_field_b = c.omega_up2 - c.omega_down2 + params.delta_b;
  return c;
}

ModelParams with_carriers(ModelParams params, double transition_frequency) {
  params.carriers = make_carriers(params, transition_frequency);
  return params;
}

}  // namespace nsiq
