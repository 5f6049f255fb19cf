#pragma once

#include <array>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "nsiq/model.hpp"

namespace nsiq {

/// Equatorial Bloch-sphere rotation
///   [[cos(θ/2), i·sin(θ/2)], [i·sin(θ/2), cos(θ/2)]].
/// R(π) is the isomer inversion gate.
struct Rotation2 {
  double theta = 0.0;
  Eigen::Matrix2cd matrix;
};

Rotation2 rotation_gate(double theta);

/// Protocol basis (|a,0⟩, |↓,0⟩, |↓,2⟩); |a,0⟩ is the shelving state.
enum class ProtocolLabel { ShelfA0 = 0, Down0 = 1, Down2 = 2 };

struct ProtocolState {
  Eigen::Vector3cd amplitudes;
};

/// Embeds a 2×2 gate on the ordered pair (first, second) of the protocol basis.
Eigen::Matrix3cd embed(const Rotation2& gate, ProtocolLabel first, ProtocolLabel second);

struct ProtocolStep {
  std::string_view name;
  Eigen::Matrix3cd gate;
  ProtocolState state;  // after the gate
};

/// Shelve with R(π−θ) on (|a,0⟩, |↓,0⟩), invert with R(π) on (|↓,0⟩, |↓,2⟩),
/// then deshelve with R(−π) on (|a,0⟩, |↓,0⟩), starting from |↓,0⟩.
std::array<ProtocolStep, 3> superposition_protocol_steps(double theta);

/// Final state (0, cos(θ/2), i·sin(θ/2)).
ProtocolState superposition_protocol(double theta);

struct InversionGate {
  double fidelity = 0.0;  // |⟨↓,2|ψ(duration)⟩|²
  double duration = 0.0;  // s
};

/// Evolves |↓,0⟩ under the rotating-wave Hamiltonian. Without a duration the
/// best one in [0.5, 1.5]·π/Ω_eff is located (Ω_eff from the closed forms).
InversionGate inversion_gate_fidelity(const ModelParams& params,
                                      std::optional<double> duration = std::nullopt);

/// Protocol with the middle R(π) replaced by the dynamical inversion of the
/// four-level model. Amplitudes are on (|a,0⟩, |↑,0⟩, |↓,0⟩, |↑,2⟩, |↓,2⟩).
struct SimulatedProtocol {
  Eigen::Matrix<std::complex<double>, 5, 1> amplitudes;
  double fidelity = 0.0;             // |⟨target|ψ⟩|², target = (0, cos, i·sin) on the qubit
  double population_fidelity = 0.0;  // classical overlap of the qubit populations
  double aux_leakage = 0.0;          // population left in |↑,·⟩
  double duration = 0.0;             // inversion pulse length (s)
};

SimulatedProtocol simulated_superposition_protocol(double theta, const ModelParams& params,
                                                   std::optional<double> duration = std::nullopt);

}  // namespace nsiq
