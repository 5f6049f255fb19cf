#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "nsiq/basis.hpp"

namespace nsiq {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

/// 4×4 Hermitian operator (angular frequency units, ħ = 1) on a labeled basis.
class HermitianOperator4 {
 public:
  /// Throws PreconditionError if `entries` is not Hermitian to 1e-12 relative
  /// to its largest entry, or NumericError on non-finite entries.
  HermitianOperator4(const Matrix4& entries, const Basis& basis);

  const Matrix4& entries() const noexcept { return entries_; }
  const Basis& basis() const noexcept { return basis_; }

  Complex entry(BasisLabel row, BasisLabel col) const;
  Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }

  /// Ascending eigenvalues.
  std::array<double, 4> eigenvalues() const;

  /// ⟨ψ|H|ψ⟩ for a vector expressed in this operator's basis.
  double expectation(const Vector4& psi) const;

 private:
  Matrix4 entries_;
  Basis basis_;
};

/// 4×4 unitary (dimensionless) on a labeled basis.
class UnitaryOperator4 {
 public:
  /// Throws PreconditionError unless U·U† = I to 1e-12 entrywise.
  UnitaryOperator4(const Matrix4& entries, const Basis& basis);

  const Matrix4& entries() const noexcept { return entries_; }
  const Basis& basis() const noexcept { return basis_; }

  Complex entry(BasisLabel row, BasisLabel col) const;
  Complex operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }

  UnitaryOperator4 adjoint() const;

 private:
  Matrix4 entries_;
  Basis basis_;
};

/// Largest entrywise deviation from Hermiticity, |H_ij − conj(H_ji)|.
double hermiticity_defect(const Matrix4& m);

/// Largest entrywise deviation of U·U† from the identity.
double unitarity_defect(const Matrix4& m);

}  // namespace nsiq
