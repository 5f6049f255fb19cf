#include "nsiq/hamiltonians.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "nsiq/effective.hpp"
#include "nsiq/errors.hpp"

namespace nsiq {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Indices in the physical basis (Up0, Down0, Up2, Down2).
constexpr int kUp0 = 0, kDown0 = 1, kUp2 = 2, kDown2 = 3;

void set_pair(Matrix4& m, int row, int col, Complex value) {
  m(row, col) = value;
  m(col, row) = std::conj(value);
}

bool nearly_equal(double a, double b, double scale) {
  return std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), scale});
}

void require_degenerate(const ModelParams& p, const char* who) {
  if (std::abs(p.delta) > 1e-12 * p.epsilon)
    throw PreconditionError(std::string(who) +
                            ": requires degenerate auxiliary states (delta = 0); use "
                            "build_theta_basis_hamiltonian for delta != 0");
}

}  // namespace

HermitianOperator4 build_lab_hamiltonian(const ModelParams& params, double t) {
  const Carriers& c = params.require_carriers();
  Matrix4 h = Matrix4::Zero();
  h(kUp0, kUp0) = c.omega_up0;
  h(kDown0, kDown0) = c.omega_down0;
  h(kUp2, kUp2) = c.omega_up2;
  h(kDown2, kDown2) = c.omega_down2;
  set_pair(h, kUp0, kDown0, params.omega_a * std::cos(c.omega_field_a * t - params.phi_a));
  set_pair(h, kUp2, kDown2, params.omega_b * std::cos(c.omega_field_b * t - params.phi_b));
  set_pair(h, kUp0, kUp2, params.epsilon);
  return HermitianOperator4(h, kPhysicalBasis);
}

UnitaryOperator4 rotation_matrix(const ModelParams& params, double t) {
  const Carriers& c = params.require_carriers();
  const double global = 0.5 * (c.omega_up2 + c.omega_up0) * t;
  Matrix4 r = Matrix4::Zero();
  r(kUp0, kUp0) = std::polar(1.0, global);
  r(kDown0, kDown0) = std::polar(1.0, global - c.omega_field_a * t);
  r(kUp2, kUp2) = std::polar(1.0, global);
  r(kDown2, kDown2) = std::polar(1.0, global - c.omega_field_b * t);
  return UnitaryOperator4(r, kPhysicalBasis);
}

Matrix4 rotation_matrix_derivative(const ModelParams& params, double t) {
  const Carriers& c = params.require_carriers();
  const double gamma = 0.5 * (c.omega_up2 + c.omega_up0);
  const Matrix4 r = rotation_matrix(params, t).entries();
  const Complex i{0.0, 1.0};
  Eigen::Vector4cd rates;
  rates << i * gamma, i * (gamma - c.omega_field_a), i * gamma, i * (gamma - c.omega_field_b);
  return r * rates.asDiagonal();
}

HermitianOperator4 build_rwa_hamiltonian(const ModelParams& params) {
  const double half_gap = 0.5 * params.delta;
  Matrix4 h = Matrix4::Zero();
  h(kUp0, kUp0) = half_gap;
  h(kDown0, kDown0) = params.delta_a + half_gap;
  h(kUp2, kUp2) = -half_gap;
  h(kDown2, kDown2) = params.delta_b - half_gap;
  set_pair(h, kUp0, kDown0, std::polar(0.5 * params.omega_a, params.phi_a));
  set_pair(h, kUp2, kDown2, std::polar(0.5 * params.omega_b, params.phi_b));
  set_pair(h, kUp0, kUp2, params.epsilon);
  return HermitianOperator4(h, kPhysicalBasis);
}

HermitianOperator4 build_symmetric_basis_hamiltonian(const ModelParams& params) {
  require_degenerate(params, "build_symmetric_basis_hamiltonian");
  // Order: UpPlus, UpMinus, Down2, Down0.
  const Complex ga = std::polar(params.omega_a / (2.0 * kSqrt2), params.phi_a);
  const Complex gb = std::polar(params.omega_b / (2.0 * kSqrt2), params.phi_b);
  Matrix4 h = Matrix4::Zero();
  h(0, 0) = params.epsilon;
  h(1, 1) = -params.epsilon;
  h(2, 2) = params.delta_b;
  h(3, 3) = params.delta_a;
  set_pair(h, 0, 2, gb);
  set_pair(h, 1, 2, gb);
  set_pair(h, 0, 3, ga);
  set_pair(h, 1, 3, -ga);
  return HermitianOperator4(h, kSymmetricBasis);
}

HermitianOperator4 build_block_hamiltonian(const ModelParams& params) {
  require_degenerate(params, "build_block_hamiltonian");
  const double scale = params.epsilon;
  if (!nearly_equal(params.omega_a, params.omega_b, scale))
    throw PreconditionError("build_block_hamiltonian: requires equal drive strengths (omega_a = omega_b)");
  if (!nearly_equal(params.delta_a, params.delta_b, scale))
    throw PreconditionError("build_block_hamiltonian: requires equal detunings (delta_a = delta_b)");

  const double half_omega = 0.25 * (params.omega_a + params.omega_b);
  const double detuning = params.mean_detuning();
  // Order: UpPlus, DownPlus, UpMinus, DownMinus.
  Matrix4 h = Matrix4::Zero();
  h(0, 0) = params.epsilon;
  h(1, 1) = detuning;
  h(2, 2) = -params.epsilon;
  h(3, 3) = detuning;
  set_pair(h, 0, 1, half_omega);
  set_pair(h, 2, 3, half_omega);
  return HermitianOperator4(h, kBlockBasis);
}

HermitianOperator4 build_theta_basis_hamiltonian(const ModelParams& params) {
  const double detuning_a = params.delta_a + 0.5 * params.delta;
  const double detuning_b = params.delta_b - 0.5 * params.delta;
  if (!nearly_equal(detuning_a, detuning_b, params.epsilon))
    throw PreconditionError(
        "build_theta_basis_hamiltonian: requires the qubit resonance delta_a + delta/2 = "
        "delta_b - delta/2");

  const MixingAngle angle = mixing_angle(params.epsilon, params.delta);
  const AuxEnergies energies = aux_eigenenergies(params.epsilon, angle);
  const double c = std::cos(angle.theta);
  const double s = std::sin(angle.theta);
  const Complex half_a = std::polar(0.5 * params.omega_a, params.phi_a);
  const Complex half_b = std::polar(0.5 * params.omega_b, params.phi_b);

  // Order: UpPlusTheta, UpMinusTheta, Down2, Down0 with
  // |+θ⟩ = c|↑,0⟩ + s|↑,2⟩ and |−θ⟩ = c|↑,2⟩ − s|↑,0⟩.
  Matrix4 h = Matrix4::Zero();
  h(0, 0) = energies.plus;
  h(1, 1) = energies.minus;
  h(2, 2) = 0.5 * (detuning_a + detuning_b);
  h(3, 3) = 0.5 * (detuning_a + detuning_b);
  set_pair(h, 0, 2, s * half_b);
  set_pair(h, 0, 3, c * half_a);
  set_pair(h, 1, 2, c * half_b);
  set_pair(h, 1, 3, -s * half_a);
  return HermitianOperator4(h, kThetaBasis);
}

}  // namespace nsiq
