#include "nsiq/state.hpp"

#include <cmath>
#include <string>

#include "nsiq/errors.hpp"

namespace nsiq {

StateVector::StateVector(const Vector4& amplitudes, const Basis& basis, double norm_tolerance)
    : amplitudes_(amplitudes), basis_(basis) {
  const double n2 = amplitudes_.squaredNorm();
  if (!std::isfinite(n2)) throw NumericError("StateVector: non-finite amplitudes");
  if (std::abs(n2 - 1.0) > norm_tolerance)
    throw PreconditionError("StateVector: squared norm " + std::to_string(n2) + " is not 1");
}

StateVector StateVector::basis_state(const Basis& basis, BasisLabel label) {
  Vector4 v = Vector4::Zero();
  v(static_cast<Eigen::Index>(index_of(basis, label))) = 1.0;
  return StateVector(v, basis);
}

Complex StateVector::amplitude(BasisLabel label) const {
  return amplitudes_(static_cast<Eigen::Index>(index_of(basis_, label)));
}

}  // namespace nsiq
