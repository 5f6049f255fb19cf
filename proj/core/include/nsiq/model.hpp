#pragma once

#include <optional>

namespace nsiq {

/// Absolute level energies and drive frequencies (rad/s). Only the lab-frame
/// Hamiltonian and the rotating-frame transformation need them.
struct Carriers {
  double omega_up0 = 0.0;
  double omega_down0 = 0.0;
  double omega_up2 = 0.0;
  double omega_down2 = 0.0;
  double omega_field_a = 0.0;
  double omega_field_b = 0.0;
};

/// Scalar parameters of the four-level model, all angular frequencies in rad/s.
///
/// epsilon couples |↑,0⟩ and |↑,2⟩; delta = ω↑0 − ω↑2 is the bare auxiliary gap;
/// omega_a (omega_b) drives |↓,0⟩ ↔ |↑,0⟩ (|↓,2⟩ ↔ |↑,2⟩) with detuning
/// delta_a (delta_b) and initial phase phi_a (phi_b).
struct ModelParams {
  double epsilon = 0.0;
  double delta = 0.0;
  double omega_a = 0.0;
  double omega_b = 0.0;
  double delta_a = 0.0;
  double delta_b = 0.0;
  double phi_a = 0.0;
  double phi_b = 0.0;
  std::optional<Carriers> carriers;

  /// Throws ConfigError on a violated invariant: epsilon > 0, non-negative
  /// drive strengths, finite values, and (when present) carriers consistent
  /// with delta, delta_a, delta_b to 1e-9 relative.
  void validate(bool allow_zero_epsilon = false) const;

  /// Symmetric detuning (Δ_a + Δ_b)/2 used by adiabatic elimination.
  double mean_detuning() const { return 0.5 * (delta_a + delta_b); }

  /// Throws ConfigError if no carriers are attached.
  const Carriers& require_carriers() const;
};

/// Carriers consistent with `params` (δ, Δ_a, Δ_b): the qubit levels sit at
/// zero and the auxiliary pair is centred on `transition_frequency`.
Carriers make_carriers(const ModelParams& params, double transition_frequency);

/// Copy of `params` with carriers from make_carriers attached.
ModelParams with_carriers(ModelParams params, double transition_frequency);

}  // namespace nsiq
