#pragma once

#include <array>
#include <complex>
#include <span>

#include "nsiq/model.hpp"

namespace nsiq {

/// Auxiliary mixing angle θ ∈ (0, π/2), tan2θ = 2ε/δ.
struct MixingAngle {
  double theta = 0.0;
};

/// θ = ½·atan2(2ε, δ); exactly π/4 at δ = 0.
MixingAngle mixing_angle(double epsilon, double delta);

struct AuxEnergies {
  double plus = 0.0;
  double minus = 0.0;
};

/// E± = ±ε/sin(2θ). Throws DomainError when sin(2θ) = 0.
AuxEnergies aux_eigenenergies(double epsilon, MixingAngle angle);

/// Effective two-level coupling and detuning of the qubit pair (|↓,2⟩, |↓,0⟩).
///
/// `omega_eff` is signed; `coupling_phase` carries φ_a − φ_b so that the
/// complex coupling is omega_eff·e^{i·coupling_phase}. `delta_eff` is the
/// energy of |↓,0⟩ minus that of |↓,2⟩ after the ac-Stark shifts. `valid` is
/// false when an auxiliary state is within 3·max(Ω_a, Ω_b) of Δ.
struct EffectivePair {
  double omega_eff = 0.0;
  double delta_eff = 0.0;
  double coupling_phase = 0.0;
  bool valid = true;

  std::complex<double> complex_coupling() const {
    return std::polar(omega_eff, coupling_phase);
  }
};

/// Adiabatic elimination of the two mixed auxiliary states at the symmetric
/// detuning Δ = (Δ_a + Δ_b)/2. Throws DomainError when Δ = E₊ or Δ = E₋.
EffectivePair adiabatic_effective(const ModelParams& params);

/// The ac-Stark part of adiabatic_effective's Δ_eff (everything except the
/// bare Δ_a + δ − Δ_b term).
double stark_imbalance(const ModelParams& params);

/// Ω_eff = −(Ω_a·Ω_b/2)·ε/((δ/2)² + ε²) at the compensated working point
/// Δ_a + Δ_b = 0. Throws PreconditionError otherwise.
double lorentzian_coupling(const ModelParams& params);

/// The six transition frequencies (magnitudes) of the block Hamiltonian for
/// δ = 0, Ω_a = Ω_b, Δ_a = Δ_b, in the order
///   s₋, s₊, ε + s₋/2 − s₊/2, ε − s₋/2 − s₊/2, ε − s₋/2 + s₊/2, ε + s₋/2 + s₊/2
/// with s∓ = √(Ω² + (ε ∓ Δ)²). Throws PreconditionError off that manifold.
std::array<double, 6> exact_transition_frequencies(const ModelParams& params);

/// Smallest non-zero entry of exact_transition_frequencies.
double lowest_transition(const ModelParams& params);

/// |ε − s₋/2 − s₊/2|, the weak-coupling branch of the lowest transition. It
/// coincides with lowest_transition for |Δ| < ε and Ω ≪ ε only.
double inner_transition(const ModelParams& params);

struct DetuningCompensation {
  double xi = 0.0;
  double residual = 0.0;  // |Δ_eff| at the returned ξ (rad/s)
  int iterations = 0;
  bool bisection = false;
};

/// Detuning split Δ_a = −δ/2 − ξ/2, Δ_b = δ/2 + ξ/2 applied to `params`.
ModelParams apply_compensation(ModelParams params, double xi);

/// Solves Δ_eff(ξ) = 0 for the split above by damped fixed-point iteration
/// (damping 0.5, at most 100 iterations) with a bisection fallback on
/// ξ ∈ [−Ω², Ω²]/ε. The fixed point is polished to 1e-13·ε; converged means
/// |Δ_eff| ≤ 1e-10·ε. Throws NumericError
/// with the residual on failure and PreconditionError outside Ω ≤ 0.3ε.
DetuningCompensation compensate_detuning(double epsilon, double delta, double omega_a,
                                         double omega_b);

/// One Raman path ground → intermediate → final.
struct RamanPath {
  double omega_g = 0.0;   // ground ↔ intermediate coupling
  double omega_f = 0.0;   // intermediate ↔ final coupling
  double detuning = 0.0;  // signed, non-zero
};

/// Ω_eff = Σ Ω_g·Ω_f/(2Δ_i), Δ_eff = Σ Ω_g²/(4Δ_i) − Σ Ω_f²/(4Δ_i).
/// Empty input gives a zero pair; a zero detuning throws DomainError.
EffectivePair generalized_raman(std::span<const RamanPath> paths);

}  // namespace nsiq
