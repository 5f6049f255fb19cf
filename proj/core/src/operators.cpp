#include "nsiq/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "nsiq/errors.hpp"

namespace nsiq {
namespace {

bool all_finite(const Matrix4& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!std::isfinite(m(i).real()) || !std::isfinite(m(i).imag())) return false;
  return true;
}

}  // namespace

double hermiticity_defect(const Matrix4& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix4& m) {
  return (m * m.adjoint() - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

HermitianOperator4::HermitianOperator4(const Matrix4& entries, const Basis& basis)
    : entries_(entries), basis_(basis) {
  if (!all_finite(entries_)) throw NumericError("HermitianOperator4: non-finite entries");
  const double scale = std::max(entries_.cwiseAbs().maxCoeff(), 1e-300);
  if (hermiticity_defect(entries_) > 1e-12 * scale)
    throw PreconditionError("HermitianOperator4: matrix is not Hermitian (defect " +
                            std::to_string(hermiticity_defect(entries_) / scale) + ")");
}

Complex HermitianOperator4::entry(BasisLabel row, BasisLabel col) const {
  return entries_(static_cast<Eigen::Index>(index_of(basis_, row)),
                  static_cast<Eigen::Index>(index_of(basis_, col)));
}

std::array<double, 4> HermitianOperator4::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("HermitianOperator4: eigensolver failed");
  const Eigen::Vector4d ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

double HermitianOperator4::expectation(const Vector4& psi) const {
  return psi.dot(entries_ * psi).real();
}

UnitaryOperator4::UnitaryOperator4(const Matrix4& entries, const Basis& basis)
    : entries_(entries), basis_(basis) {
  if (!all_finite(entries_)) throw NumericError("UnitaryOperator4: non-finite entries");
  if (unitarity_defect(entries_) > 1e-12)
    throw PreconditionError("UnitaryOperator4: matrix is not unitary (defect " +
                            std::to_string(unitarity_defect(entries_)) + ")");
}

Complex UnitaryOperator4::entry(BasisLabel row, BasisLabel col) const {
  return entries_(static_cast<Eigen::Index>(index_of(basis_, row)),
                  static_cast<Eigen::Index>(index_of(basis_, col)));
}

UnitaryOperator4 UnitaryOperator4::adjoint() const {
  return UnitaryOperator4(entries_.adjoint(), basis_);
}

}  // namespace nsiq
