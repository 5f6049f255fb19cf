#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "nsiq/model.hpp"
#include "nsiq/operators.hpp"
#include "nsiq/state.hpp"

namespace nsiq {

/// Exact evolution under a time-independent Hamiltonian by eigendecomposition,
/// ψ(t) = V·e^{−iDt}·V†·ψ(0). Times must be sorted and non-negative.
std::vector<StateVector> evolve_rwa(const HermitianOperator4& h, const StateVector& psi0,
                                    std::span<const double> times);

struct LabStats {
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double max_norm_drift = 0.0;
};

/// Integrates the lab-frame Schrödinger equation with the full Ω·cos(ωt − φ)
/// drives, using an adaptive Dormand–Prince 5(4) pair at relative tolerance
/// `tol` ∈ [1e-12, 1e-4]. The static level energies are handled exactly in the
/// interaction picture; returned states are lab-frame amplitudes on the
/// physical basis. Throws NumericError (with time) on step-size underflow.
std::vector<StateVector> evolve_lab(const ModelParams& params, const StateVector& psi0,
                                    std::span<const double> times, double tol = 1e-10,
                                    LabStats* stats = nullptr);

/// Per-label populations over time. aux_total sums the auxiliary (|↑,·⟩) labels.
struct PopulationTrace {
  Basis basis = kPhysicalBasis;
  std::vector<double> times;
  std::vector<std::array<double, 4>> populations;
  std::vector<double> aux_total;

  std::size_t size() const { return times.size(); }
  /// Column of one label; throws BasisMismatchError if the label is absent.
  std::vector<double> column(BasisLabel label) const;
};

/// Throws PreconditionError on length mismatch and BasisMismatchError on mixed bases.
PopulationTrace populations(std::span<const StateVector> states, std::span<const double> times);

enum class CouplingMethod { FourierDominant, AnalyticLowestGap };

struct CouplingEstimate {
  double omega_eff = 0.0;      // rad/s magnitude; 0 when no coherent transfer
  CouplingMethod method = CouplingMethod::FourierDominant;
  double resolution = 0.0;     // rad/s, 2π/horizon for the Fourier method
  bool coherent = true;        // false: no peak above 10× the median floor
  double spectral_floor = 0.0; // median spectral magnitude
};

/// Uniform grid t_n = n·horizon/samples, n = 0..samples−1.
std::vector<double> uniform_times(double horizon, std::size_t samples);

/// Evolves |↓,0⟩ under the rotating-wave Hamiltonian and returns the slow
/// oscillation frequency of P(|↓,2⟩) from its windowed spectrum.
/// Requires samples ≥ 1024 and horizon > 0.
CouplingEstimate extract_effective_coupling(const ModelParams& params, double horizon,
                                            std::size_t samples);

/// Closed-form counterpart: the lowest transition of the block Hamiltonian.
CouplingEstimate analytic_effective_coupling(const ModelParams& params);

/// max over the sampled grid of the auxiliary occupation, starting from |↓,0⟩.
double max_aux_occupation(const ModelParams& params, double horizon, std::size_t samples);

}  // namespace nsiq
