#pragma once

#include "nsiq/basis.hpp"
#include "nsiq/operators.hpp"

namespace nsiq {

/// Normalized four-level state on a labeled basis.
class StateVector {
 public:
  /// Throws PreconditionError unless |Σ|a|² − 1| ≤ norm_tolerance. Integrator
  /// outputs pass their own (looser) bound.
  StateVector(const Vector4& amplitudes, const Basis& basis, double norm_tolerance = 1e-9);

  static StateVector basis_state(const Basis& basis, BasisLabel label);

  const Vector4& amplitudes() const noexcept { return amplitudes_; }
  const Basis& basis() const noexcept { return basis_; }

  Complex amplitude(BasisLabel label) const;
  double population(BasisLabel label) const { return std::norm(amplitude(label)); }
  double norm() const { return amplitudes_.norm(); }

 private:
  Vector4 amplitudes_;
  Basis basis_;
};

}  // namespace nsiq
