#include "nsiq/effective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nsiq/errors.hpp"

namespace nsiq {
namespace {

bool nearly_equal(double a, double b, double scale) {
  return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), scale});
}

void require_block_manifold(const ModelParams& p, const char* who) {
  if (std::abs(p.delta) > 1e-12 * p.epsilon)
    throw PreconditionError(std::string(who) + ": requires delta = 0");
  if (!nearly_equal(p.omega_a, p.omega_b, p.epsilon))
    throw PreconditionError(std::string(who) + ": requires omega_a = omega_b");
  if (!nearly_equal(p.delta_a, p.delta_b, p.epsilon))
    throw PreconditionError(std::string(who) + ": requires delta_a = delta_b");
}

struct Gaps {
  double minus;  // sqrt(Ω² + (ε − Δ)²)
  double plus;   // sqrt(Ω² + (ε + Δ)²)
};

Gaps block_gaps(const ModelParams& p) {
  const double omega = 0.5 * (p.omega_a + p.omega_b);
  const double detuning = p.mean_detuning();
  return {std::hypot(omega, p.epsilon - detuning), std::hypot(omega, p.epsilon + detuning)};
}

}  // namespace

MixingAngle mixing_angle(double epsilon, double delta) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon) || !std::isfinite(delta))
    throw PreconditionError("mixing_angle: epsilon must be finite and > 0");
  return {0.5 * std::atan2(2.0 * epsilon, delta)};
}

AuxEnergies aux_eigenenergies(double epsilon, MixingAngle angle) {
  if (!(angle.theta > 0.0 && angle.theta < 0.5 * std::numbers::pi))
    throw DomainError("aux_eigenenergies: theta must lie in (0, pi/2)");
  const double s2 = std::sin(2.0 * angle.theta);
  if (s2 == 0.0) throw DomainError("aux_eigenenergies: sin(2 theta) = 0");
  const double e = epsilon / s2;
  return {e, -e};
}

EffectivePair adiabatic_effective(const ModelParams& params) {
  params.validate();
  // cos 2θ and sin 2θ straight from (δ, 2ε); identical to the angle route, but exact at δ = 0.
  const double radius = std::hypot(params.delta, 2.0 * params.epsilon);
  const double cos2 = params.delta / radius;
  const double sin2 = 2.0 * params.epsilon / radius;
  const double cc = 0.5 * (1.0 + cos2);
  const double ss = 0.5 * (1.0 - cos2);
  const double sc = 0.5 * sin2;
  const double e_plus = 0.5 * radius;
  const double e_minus = -e_plus;

  const double detuning = params.mean_detuning();
  const double dp = detuning - e_plus;
  const double dm = detuning - e_minus;
  if (dp == 0.0 || dm == 0.0)
    throw DomainError("adiabatic_effective: mean detuning coincides with an auxiliary eigenenergy");

  const double oa2 = params.omega_a * params.omega_a;
  const double ob2 = params.omega_b * params.omega_b;

  EffectivePair out;
  out.omega_eff = 0.5 * params.omega_a * params.omega_b * sc * (1.0 / dp - 1.0 / dm);
  const double stark = 0.25 * ((oa2 * cc - ob2 * ss) / dp + (oa2 * ss - ob2 * cc) / dm);
  out.delta_eff = stark + (params.delta_a + params.delta - params.delta_b);
  out.coupling_phase = params.phi_a - params.phi_b;
  const double drive = std::max(params.omega_a, params.omega_b);
  out.valid = std::min(std::abs(dp), std::abs(dm)) >= 3.0 * drive;
  return out;
}

double stark_imbalance(const ModelParams& params) {
  const EffectivePair pair = adiabatic_effective(params);
  return pair.delta_eff - (params.delta_a + params.delta - params.delta_b);
}

double lorentzian_coupling(const ModelParams& params) {
  params.validate();
  const double scale = std::max({std::abs(params.delta_a), std::abs(params.delta_b), params.epsilon});
  if (std::abs(params.delta_a + params.delta_b) > 1e-9 * scale)
    throw PreconditionError("lorentzian_coupling: requires delta_a + delta_b = 0");
  const double half = 0.5 * params.delta;
  return -0.5 * params.omega_a * params.omega_b * params.epsilon /
         (half * half + params.epsilon * params.epsilon);
}

std::array<double, 6> exact_transition_frequencies(const ModelParams& params) {
  params.validate();
  require_block_manifold(params, "exact_transition_frequencies");
  const Gaps g = block_gaps(params);
  const double e = params.epsilon;
  return {std::abs(g.minus),
          std::abs(g.plus),
          std::abs(e + 0.5 * g.minus - 0.5 * g.plus),
          std::abs(e - 0.5 * g.minus - 0.5 * g.plus),
          std::abs(e - 0.5 * g.minus + 0.5 * g.plus),
          std::abs(e + 0.5 * g.minus + 0.5 * g.plus)};
}

double lowest_transition(const ModelParams& params) {
  const auto freqs = exact_transition_frequencies(params);
  const double cutoff = 1e-12 * params.epsilon;
  double best = std::numeric_limits<double>::infinity();
  for (double f : freqs)
    if (f > cutoff) best = std::min(best, f);
  return std::isfinite(best) ? best : 0.0;
}

double inner_transition(const ModelParams& params) {
  params.validate();
  require_block_manifold(params, "inner_transition");
  const Gaps g = block_gaps(params);
  return std::abs(params.epsilon - 0.5 * g.minus - 0.5 * g.plus);
}

ModelParams apply_compensation(ModelParams params, double xi) {
  params.delta_a = -0.5 * params.delta - 0.5 * xi;
  params.delta_b = 0.5 * params.delta + 0.5 * xi;
  return params;
}

DetuningCompensation compensate_detuning(double epsilon, double delta, double omega_a,
                                         double omega_b) {
  ModelParams base;
  base.epsilon = epsilon;
  base.delta = delta;
  base.omega_a = omega_a;
  base.omega_b = omega_b;
  base.validate();
  const double drive = std::max(omega_a, omega_b);
  if (drive > 0.3 * epsilon)
    throw PreconditionError("compensate_detuning: requires omega <= 0.3 epsilon");

  const double target = 1e-10 * epsilon;
  const double polish = 1e-13 * epsilon;
  auto residual = [&](double xi) { return adiabatic_effective(apply_compensation(base, xi)).delta_eff; };

  DetuningCompensation out;
  double xi = 0.0;
  double r = residual(xi);
  constexpr double kDamping = 0.5;
  constexpr int kMaxIterations = 100;
  while (std::abs(r) > polish && out.iterations < kMaxIterations) {
    xi += kDamping * r;
    r = residual(xi);
    ++out.iterations;
    if (!std::isfinite(r)) break;
  }
  if (std::isfinite(r) && std::abs(r) <= target) {
    out.xi = xi;
    out.residual = std::abs(r);
    return out;
  }

  out.bisection = true;
  double lo = -drive * drive / epsilon;
  double hi = drive * drive / epsilon;
  double r_lo = residual(lo);
  double r_hi = residual(hi);
  if (!(r_lo * r_hi <= 0.0))
    throw NumericError("compensate_detuning: no sign change of delta_eff on the bracket; residual " +
                       std::to_string(std::abs(r)) + " rad/s");
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double r_mid = residual(mid);
    ++out.iterations;
    if (std::abs(r_mid) <= target) {
      out.xi = mid;
      out.residual = std::abs(r_mid);
      return out;
    }
    if ((r_mid < 0.0) == (r_lo < 0.0)) {
      lo = mid;
      r_lo = r_mid;
    } else {
      hi = mid;
    }
  }
  throw NumericError("compensate_detuning: bisection did not reach the residual target");
}

EffectivePair generalized_raman(std::span<const RamanPath> paths) {
  EffectivePair out;
  for (const RamanPath& path : paths) {
    if (path.detuning == 0.0 || !std::isfinite(path.detuning))
      throw DomainError("generalized_raman: path detuning must be finite and non-zero");
    out.omega_eff += path.omega_g * path.omega_f / (2.0 * path.detuning);
    out.delta_eff += (path.omega_g * path.omega_g - path.omega_f * path.omega_f) / (4.0 * path.detuning);
  }
  return out;
}

}  // namespace nsiq
