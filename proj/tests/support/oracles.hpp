#pragma once

// Test-side reference computations. Nothing here calls into nsiq; each routine
// is a deliberately naive, independent route to the quantity under test.

#include <array>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using M4 = Eigen::Matrix4cd;
using V4 = Eigen::Vector4cd;

constexpr double kPi = 3.14159265358979323846;

double khz(double f);  // kHz -> rad/s

// exp(A) by scaling and squaring of a 40-term Taylor series.
M4 expm(const M4& a);

// ψ(t) = exp(−iHt)ψ0 via expm.
V4 propagate_expm(const M4& h, const V4& psi0, double t);

// Classical RK4 with a fixed step count for i ψ' = H(t) ψ.
V4 rk4(const std::function<M4(double)>& h, const V4& psi0, double t0, double t1, long steps);

// Eigenvalues of the real symmetric 2×2 [[a, b], [b, d]] by the quadratic formula, ascending.
std::array<double, 2> eig2(double a, double b, double d);

// |λi − λj| for all i < j, sorted ascending.
std::vector<double> pairwise_gaps(std::vector<double> eigenvalues);

// Root of f on [lo, hi] with a sign change, to |hi − lo| ≤ tol.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

// Literal rotating-frame Hamiltonian in (Up0, Down0, Up2, Down2), written out by hand.
struct Params {
  double eps = 0, delta = 0, oa = 0, ob = 0, da = 0, db = 0, pa = 0, pb = 0;
};
M4 rwa_matrix(const Params& p);

// Unitary whose columns are the symmetric-basis vectors written in the physical basis.
M4 symmetric_change(const Params& p);
M4 block_change(const Params& p);
M4 theta_change(const Params& p);

// Eigenvalues of a Hermitian 4×4 by cyclic complex Jacobi sweeps, ascending.
std::array<double, 4> jacobi_eigenvalues(M4 h);

// 3×3 protocol pieces written out exactly as printed, basis (A0, Down0, Down2).
Eigen::Matrix3cd protocol_step1(double theta);
Eigen::Matrix3cd protocol_step2();
Eigen::Matrix3cd protocol_step3();

std::mt19937_64& rng();
double uniform(double lo, double hi);

}  // namespace oracle
