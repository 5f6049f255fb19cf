#include "nsiq/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsiq/errors.hpp"
#include "nsiq/units.hpp"

namespace nsiq {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kModelKeys{"epsilon_khz", "delta_khz",   "omega_a_khz", "omega_b_khz",
                                          "delta_a_khz", "delta_b_khz", "phi_a_rad",   "phi_b_rad"};
const std::vector<std::string> kCarrierKeys{"omega_up0_khz",     "omega_down0_khz",
                                            "omega_up2_khz",     "omega_down2_khz",
                                            "omega_field_a_khz", "omega_field_b_khz"};

std::string stem(const std::string& key) {
  const auto cut = key.rfind('_');
  if (cut == std::string::npos) return key;
  const std::string suffix = key.substr(cut + 1);
  if (suffix == "khz" || suffix == "rad" || suffix == "us" || suffix == "hz" || suffix == "mhz" ||
      suffix == "s" || suffix == "ms" || suffix == "deg")
    return key.substr(0, cut);
  return key;
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (allowed.contains(key)) continue;
    std::string hint;
    for (const auto& known : allowed)
      if (stem(known) == stem(key)) hint = "; did you mean '" + known + "'?";
    throw ConfigError(key, "unknown key" + hint);
  }
}

double get_number(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(key, "must be finite");
  return x;
}

std::optional<double> opt_number(const json& doc, const std::string& key) {
  if (!doc.contains(key)) return std::nullopt;
  return get_number(doc, key);
}

double require_number(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ConfigError(key, "required key missing");
  return get_number(doc, key);
}

std::size_t get_count(const json& doc, const std::string& key, std::size_t fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned()) throw ConfigError(key, "expected an integer");
  const auto n = v.get<long long>();
  if (n < 0) throw ConfigError(key, "must be >= 0");
  return static_cast<std::size_t>(n);
}

std::string get_string(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

// Accepts both "start" and "start_khz" (same unit).
double require_aliased(const json& doc, const std::string& bare, const std::string& suffixed) {
  if (doc.contains(bare) && doc.contains(suffixed))
    throw ConfigError(suffixed, "given twice (also as '" + bare + "')");
  if (doc.contains(bare)) return get_number(doc, bare);
  return require_number(doc, suffixed);
}

// Maps a ModelParams field name to its unit-suffixed document key.
std::string config_key(const std::string& field) {
  if (field.starts_with("carriers")) return "carriers";
  if (field.starts_with("phi_")) return field + "_rad";
  return field + "_khz";
}

ModelParams parse_model(const json& doc, bool allow_carriers) {
  ModelParams p;
  p.epsilon = khz_to_rad_s(opt_number(doc, "epsilon_khz").value_or(200.0));
  p.omega_a = khz_to_rad_s(opt_number(doc, "omega_a_khz").value_or(30.0));
  p.omega_b = khz_to_rad_s(opt_number(doc, "omega_b_khz").value_or(30.0));
  p.phi_a = opt_number(doc, "phi_a_rad").value_or(0.0);
  p.phi_b = opt_number(doc, "phi_b_rad").value_or(0.0);
  if (!(p.epsilon > 0.0)) throw ConfigError("epsilon_khz", "must be > 0");
  if (p.omega_a < 0.0) throw ConfigError("omega_a_khz", "must be >= 0");
  if (p.omega_b < 0.0) throw ConfigError("omega_b_khz", "must be >= 0");

  const auto delta = opt_number(doc, "delta_khz");
  const auto delta_a = opt_number(doc, "delta_a_khz");
  const auto delta_b = opt_number(doc, "delta_b_khz");

  const bool explicit_carriers = std::any_of(kCarrierKeys.begin(), kCarrierKeys.end(),
                                             [&](const auto& k) { return doc.contains(k); });
  if (allow_carriers && explicit_carriers) {
    if (doc.contains("carrier_khz")) throw ConfigError("carrier_khz", "conflicts with explicit level energies");
    Carriers c;
    c.omega_up0 = khz_to_rad_s(require_number(doc, "omega_up0_khz"));
    c.omega_down0 = khz_to_rad_s(require_number(doc, "omega_down0_khz"));
    c.omega_up2 = khz_to_rad_s(require_number(doc, "omega_up2_khz"));
    c.omega_down2 = khz_to_rad_s(require_number(doc, "omega_down2_khz"));
    c.omega_field_a = khz_to_rad_s(require_number(doc, "omega_field_a_khz"));
    c.omega_field_b = khz_to_rad_s(require_number(doc, "omega_field_b_khz"));
    p.delta = delta ? khz_to_rad_s(*delta) : c.omega_up0 - c.omega_up2;
    p.delta_a = delta_a ? khz_to_rad_s(*delta_a) : c.omega_field_a - (c.omega_up0 - c.omega_down0);
    p.delta_b = delta_b ? khz_to_rad_s(*delta_b) : c.omega_field_b - (c.omega_up2 - c.omega_down2);
    p.carriers = c;
  } else {
    p.delta = khz_to_rad_s(delta.value_or(0.0));
    p.delta_a = khz_to_rad_s(delta_a.value_or(0.0));
    p.delta_b = khz_to_rad_s(delta_b.value_or(0.0));
    if (allow_carriers && doc.contains("carrier_khz")) {
      const double carrier = khz_to_rad_s(get_number(doc, "carrier_khz"));
      if (!(carrier > 0.0)) throw ConfigError("carrier_khz", "must be > 0");
      p = with_carriers(p, carrier);
    }
  }
  try {
    p.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(config_key(e.key_path()), std::string(e.what()).substr(e.key_path().size() + 2));
  }
  return p;
}

std::set<std::string> with_model(std::set<std::string> keys) {
  keys.insert(kModelKeys.begin(), kModelKeys.end());
  return keys;
}

SweepSpec parse_sweep(const json& doc, SweepKind kind) {
  reject_unknown(doc, with_model({"kind", "start", "stop", "start_khz", "stop_khz", "points",
                                  "horizon_periods", "samples"}));
  SweepSpec spec;
  spec.kind = kind;
  spec.fixed = parse_model(doc, false);
  spec.start_khz = require_aliased(doc, "start", "start_khz");
  spec.stop_khz = require_aliased(doc, "stop", "stop_khz");
  if (!doc.contains("points")) throw ConfigError("points", "required key missing");
  spec.points = get_count(doc, "points", 0);
  if (doc.contains("horizon_periods")) spec.horizon_periods = get_number(doc, "horizon_periods");
  spec.samples = get_count(doc, "samples", spec.samples);
  spec.validate();
  return spec;
}

EvolveSpec parse_evolve(const json& doc) {
  std::set<std::string> keys = with_model({"kind", "frame", "t_max_us", "points", "tol", "initial", "carrier_khz"});
  keys.insert(kCarrierKeys.begin(), kCarrierKeys.end());
  reject_unknown(doc, keys);
  EvolveSpec spec;
  spec.params = parse_model(doc, true);
  if (doc.contains("frame")) {
    const std::string frame = get_string(doc, "frame");
    if (frame == "rwa") spec.frame = Frame::Rwa;
    else if (frame == "lab") spec.frame = Frame::Lab;
    else throw ConfigError("frame", "expected 'rwa' or 'lab'");
  }
  if (spec.frame == Frame::Lab && !spec.params.carriers)
    throw ConfigError("carrier_khz", "lab frame requires carrier_khz or explicit level energies");
  spec.t_max = us_to_s(require_number(doc, "t_max_us"));
  if (!(spec.t_max > 0.0)) throw ConfigError("t_max_us", "must be > 0");
  spec.points = get_count(doc, "points", spec.points);
  if (spec.points < 2) throw ConfigError("points", "must be >= 2");
  if (doc.contains("tol")) spec.tol = get_number(doc, "tol");
  if (!(spec.tol >= 1e-12 && spec.tol <= 1e-4)) throw ConfigError("tol", "must lie in [1e-12, 1e-4]");
  if (doc.contains("initial")) {
    const auto label = label_from_string(get_string(doc, "initial"));
    if (!label || !find_label(kPhysicalBasis, *label))
      throw ConfigError("initial", "expected one of up0, down0, up2, down2");
    spec.initial = *label;
  }
  return spec;
}

ProtocolSpec parse_protocol(const json& doc) {
  reject_unknown(doc, with_model({"kind", "theta_rad", "simulate", "duration_us"}));
  ProtocolSpec spec;
  spec.theta = require_number(doc, "theta_rad");
  bool simulate = false;
  if (doc.contains("simulate")) {
    if (!doc.at("simulate").is_boolean()) throw ConfigError("simulate", "expected true or false");
    simulate = doc.at("simulate").get<bool>();
  }
  if (simulate) spec.simulate = parse_model(doc, false);
  if (doc.contains("duration_us")) {
    if (!simulate) throw ConfigError("duration_us", "only meaningful with simulate = true");
    spec.duration = us_to_s(get_number(doc, "duration_us"));
    if (!(*spec.duration > 0.0)) throw ConfigError("duration_us", "must be > 0");
  }
  return spec;
}

void put_model(ordered_json& out, const ModelParams& p) {
  out["epsilon_khz"] = rad_s_to_khz(p.epsilon);
  out["delta_khz"] = rad_s_to_khz(p.delta);
  out["omega_a_khz"] = rad_s_to_khz(p.omega_a);
  out["omega_b_khz"] = rad_s_to_khz(p.omega_b);
  out["delta_a_khz"] = rad_s_to_khz(p.delta_a);
  out["delta_b_khz"] = rad_s_to_khz(p.delta_b);
  out["phi_a_rad"] = p.phi_a;
  out["phi_b_rad"] = p.phi_b;
  if (p.carriers) {
    const Carriers& c = *p.carriers;
    out["omega_up0_khz"] = rad_s_to_khz(c.omega_up0);
    out["omega_down0_khz"] = rad_s_to_khz(c.omega_down0);
    out["omega_up2_khz"] = rad_s_to_khz(c.omega_up2);
    out["omega_down2_khz"] = rad_s_to_khz(c.omega_down2);
    out["omega_field_a_khz"] = rad_s_to_khz(c.omega_field_a);
    out["omega_field_b_khz"] = rad_s_to_khz(c.omega_field_b);
  }
}

}  // namespace

ConfigSpec parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");
  if (!doc.contains("kind")) throw ConfigError("kind", "required key missing");
  const std::string kind = get_string(doc, "kind");
  if (kind == "detuning") return parse_sweep(doc, SweepKind::Detuning);
  if (kind == "coupling") return parse_sweep(doc, SweepKind::Coupling);
  if (kind == "degeneracy") return parse_sweep(doc, SweepKind::Degeneracy);
  if (kind == "evolve") return parse_evolve(doc);
  if (kind == "protocol") return parse_protocol(doc);
  throw ConfigError("kind", "expected one of detuning, coupling, degeneracy, evolve, protocol");
}

std::string preset_config(std::string_view name) {
  ordered_json doc;
  if (name == "fig4b") {
    doc = {{"kind", "detuning"}, {"start_khz", -600.0}, {"stop_khz", 600.0}, {"points", 241}};
  } else if (name == "fig5b") {
    doc = {{"kind", "coupling"}, {"start_khz", 10.0}, {"stop_khz", 1600.0}, {"points", 160}};
  } else if (name == "fig6") {
    doc = {{"kind", "degeneracy"}, {"start_khz", -2000.0}, {"stop_khz", 2000.0}, {"points", 201}};
  } else {
    throw ConfigError("preset", "expected one of fig4b, fig5b, fig6");
  }
  doc["epsilon_khz"] = 200.0;
  doc["omega_a_khz"] = 30.0;
  doc["omega_b_khz"] = 30.0;
  doc["horizon_periods"] = 40;
  doc["samples"] = 4096;
  return doc.dump(2) + "\n";
}

std::string describe_config(const ConfigSpec& spec) {
  ordered_json out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SweepSpec>) {
          out["kind"] = std::string(to_string(s.kind));
          put_model(out, s.fixed);
          out["start_khz"] = s.start_khz;
          out["stop_khz"] = s.stop_khz;
          out["points"] = s.points;
          out["horizon_periods"] = s.horizon_periods;
          out["samples"] = s.samples;
        } else if constexpr (std::is_same_v<T, EvolveSpec>) {
          out["kind"] = "evolve";
          put_model(out, s.params);
          out["frame"] = s.frame == Frame::Lab ? "lab" : "rwa";
          out["t_max_us"] = s_to_us(s.t_max);
          out["points"] = s.points;
          out["tol"] = s.tol;
          out["initial"] = std::string(to_string(s.initial));
        } else {
          out["kind"] = "protocol";
          out["theta_rad"] = s.theta;
          out["simulate"] = s.simulate.has_value();
          if (s.simulate) put_model(out, *s.simulate);
          if (s.duration) out["duration_us"] = s_to_us(*s.duration);
        }
      },
      spec);
  return out.dump(2);
}

}  // namespace nsiq
