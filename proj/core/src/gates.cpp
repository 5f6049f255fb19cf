#include "nsiq/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nsiq/effective.hpp"
#include "nsiq/errors.hpp"
#include "nsiq/hamiltonians.hpp"
#include "nsiq/propagator.hpp"

namespace nsiq {
namespace {

constexpr double kPi = std::numbers::pi;

int idx(ProtocolLabel label) { return static_cast<int>(label); }

bool on_block_manifold(const ModelParams& p) {
  auto close = [&](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), p.epsilon});
  };
  return std::abs(p.delta) <= 1e-12 * p.epsilon && close(p.omega_a, p.omega_b) &&
         close(p.delta_a, p.delta_b);
}

// Expected qubit Rabi frequency; zero when nothing drives the transfer.
double expected_rabi(const ModelParams& p) {
  if (on_block_manifold(p)) {
    if (p.omega_a == 0.0) return 0.0;
    return lowest_transition(p);
  }
  const EffectivePair pair = adiabatic_effective(p);
  return std::hypot(pair.omega_eff, pair.delta_eff);
}

Vector4 evolve_down0(const ModelParams& params, double duration) {
  const std::array<double, 1> t{duration};
  const auto states = evolve_rwa(build_rwa_hamiltonian(params),
                                 StateVector::basis_state(kPhysicalBasis, BasisLabel::Down0), t);
  return states.front().amplitudes();
}

double transfer(const ModelParams& params, double duration) {
  return std::norm(evolve_down0(params, duration)(static_cast<int>(index_of(kPhysicalBasis, BasisLabel::Down2))));
}

}  // namespace

Rotation2 rotation_gate(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Rotation2 r;
  r.theta = theta;
  r.matrix << Complex{c, 0.0}, Complex{0.0, s}, Complex{0.0, s}, Complex{c, 0.0};
  return r;
}

Eigen::Matrix3cd embed(const Rotation2& gate, ProtocolLabel first, ProtocolLabel second) {
  if (first == second) throw PreconditionError("embed: gate acts on two distinct levels");
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
  m(idx(first), idx(first)) = gate.matrix(0, 0);
  m(idx(first), idx(second)) = gate.matrix(0, 1);
  m(idx(second), idx(first)) = gate.matrix(1, 0);
  m(idx(second), idx(second)) = gate.matrix(1, 1);
  return m;
}

std::array<ProtocolStep, 3> superposition_protocol_steps(double theta) {
  if (!std::isfinite(theta)) throw PreconditionError("superposition_protocol: theta must be finite");
  Eigen::Vector3cd psi = Eigen::Vector3cd::Zero();
  psi(idx(ProtocolLabel::Down0)) = 1.0;

  const Eigen::Matrix3cd g1 = embed(rotation_gate(kPi - theta), ProtocolLabel::ShelfA0, ProtocolLabel::Down0);
  const Eigen::Matrix3cd g2 = embed(rotation_gate(kPi), ProtocolLabel::Down0, ProtocolLabel::Down2);
  const Eigen::Matrix3cd g3 = embed(rotation_gate(-kPi), ProtocolLabel::ShelfA0, ProtocolLabel::Down0);

  std::array<ProtocolStep, 3> steps;
  psi = g1 * psi;
  steps[0] = {"R(pi - theta) on (A0, Down0)", g1, {psi}};
  psi = g2 * psi;
  steps[1] = {"R(pi) on (Down0, Down2)", g2, {psi}};
  psi = g3 * psi;
  steps[2] = {"R(-pi) on (A0, Down0)", g3, {psi}};
  return steps;
}

ProtocolState superposition_protocol(double theta) { return superposition_protocol_steps(theta)[2].state; }

InversionGate inversion_gate_fidelity(const ModelParams& params, std::optional<double> duration) {
  params.validate();
  if (duration) {
    if (!(*duration >= 0.0) || !std::isfinite(*duration))
      throw PreconditionError("inversion_gate_fidelity: duration must be finite and >= 0");
    return {transfer(params, *duration), *duration};
  }

  const double rabi = expected_rabi(params);
  if (!(rabi > 0.0)) return {0.0, 0.0};

  // Coarse scan around π/W, then golden-section refinement of the best bracket.
  const double center = kPi / rabi;
  constexpr int kGrid = 2001;
  const double lo = 0.5 * center, hi = 1.5 * center;
  const double step = (hi - lo) / (kGrid - 1);
  double best_t = lo, best_f = -1.0;
  for (int k = 0; k < kGrid; ++k) {
    const double t = lo + step * k;
    const double f = transfer(params, t);
    if (f > best_f) {
      best_f = f;
      best_t = t;
    }
  }
  double a = std::max(0.0, best_t - step), b = best_t + step;
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - golden * (b - a), x2 = a + golden * (b - a);
  double f1 = transfer(params, x1), f2 = transfer(params, x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 > f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - golden * (b - a);
      f1 = transfer(params, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + golden * (b - a);
      f2 = transfer(params, x2);
    }
  }
  const double t_star = 0.5 * (a + b);
  const double f_star = transfer(params, t_star);
  return f_star >= best_f ? InversionGate{f_star, t_star} : InversionGate{best_f, best_t};
}

SimulatedProtocol simulated_superposition_protocol(double theta, const ModelParams& params,
                                                   std::optional<double> duration) {
  const InversionGate gate = inversion_gate_fidelity(params, duration);
  const auto steps = superposition_protocol_steps(theta);
  const Eigen::Vector3cd after_first = steps[0].state.amplitudes;

  // Slot order: A0, Up0, Down0, Up2, Down2.
  const Vector4 moved = evolve_down0(params, gate.duration) * after_first(idx(ProtocolLabel::Down0));
  Eigen::Matrix<Complex, 5, 1> psi;
  psi(0) = after_first(idx(ProtocolLabel::ShelfA0));
  for (int k = 0; k < 4; ++k) psi(k + 1) = moved(k);

  const Eigen::Matrix2cd last = rotation_gate(-kPi).matrix;
  const Complex shelf = psi(0), down0 = psi(2);
  psi(0) = last(0, 0) * shelf + last(0, 1) * down0;
  psi(2) = last(1, 0) * shelf + last(1, 1) * down0;

  Eigen::Matrix<Complex, 5, 1> target = Eigen::Matrix<Complex, 5, 1>::Zero();
  target(2) = std::cos(0.5 * theta);
  target(4) = Complex{0.0, std::sin(0.5 * theta)};

  SimulatedProtocol out;
  out.amplitudes = psi;
  out.fidelity = std::norm(target.dot(psi));
  double overlap = 0.0;
  for (int k : {0, 2, 4}) overlap += std::sqrt(std::norm(target(k)) * std::norm(psi(k)));
  out.population_fidelity = overlap * overlap;
  out.aux_leakage = std::norm(psi(1)) + std::norm(psi(3));
  out.duration = gate.duration;
  return out;
}

}  // namespace nsiq
