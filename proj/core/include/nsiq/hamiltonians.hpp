#pragma once

#include "nsiq/model.hpp"
#include "nsiq/operators.hpp"

namespace nsiq {

/// Lab-frame H(t)/ħ on (Up0, Down0, Up2, Down2): level energies on the diagonal,
/// Ω_{a,b}·cos(ω_{a,b}t − φ_{a,b}) inside each spin manifold and ε between the
/// auxiliary states. Requires carriers.
HermitianOperator4 build_lab_hamiltonian(const ModelParams& params, double t);

/// Diagonal frame rotation R(t) = e^{i(ω↑2+ω↑0)t/2}·diag(1, e^{−iω_a t}, 1, e^{−iω_b t}).
/// Requires carriers.
UnitaryOperator4 rotation_matrix(const ModelParams& params, double t);

/// Time derivative of R(t), needed for H_R = −iR·dR†/dt + R·H·R†.
Matrix4 rotation_matrix_derivative(const ModelParams& params, double t);

/// Rotating-wave Hamiltonian on (Up0, Down0, Up2, Down2).
HermitianOperator4 build_rwa_hamiltonian(const ModelParams& params);

/// Degenerate auxiliary states (δ = 0) in the (UpPlus, UpMinus, Down2, Down0)
/// basis, |↑,±⟩ = (|↑,2⟩ ± |↑,0⟩)/√2. Throws PreconditionError when δ ≠ 0.
HermitianOperator4 build_symmetric_basis_hamiltonian(const ModelParams& params);

/// Block-diagonal form on (UpPlus, DownPlus, UpMinus, DownMinus) for δ = 0,
/// Ω_a = Ω_b and Δ_a = Δ_b. The field phases are absorbed into
/// |↓,±⟩ = (e^{−iφ_b}|↓,2⟩ ± e^{−iφ_a}|↓,0⟩)/√2.
HermitianOperator4 build_block_hamiltonian(const ModelParams& params);

/// Mixed auxiliary eigenbasis (UpPlusTheta, UpMinusTheta, Down2, Down0) with
/// |↑,+θ⟩ = cosθ|↑,0⟩ + sinθ|↑,2⟩ (energy E₊) and
/// |↑,−θ⟩ = cosθ|↑,2⟩ − sinθ|↑,0⟩ (energy E₋), tan2θ = 2ε/δ.
/// Requires the qubit resonance Δ_a + δ/2 = Δ_b − δ/2 (to 1e-9 relative).
HermitianOperator4 build_theta_basis_hamiltonian(const ModelParams& params);

}  // namespace nsiq
