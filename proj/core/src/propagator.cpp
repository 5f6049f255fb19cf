#include "nsiq/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "nsiq/effective.hpp"
#include "nsiq/errors.hpp"
#include "nsiq/hamiltonians.hpp"
#include "nsiq/ode.hpp"
#include "nsiq/spectral.hpp"

namespace nsiq {
namespace {

void require_times(std::span<const double> times, const char* who) {
  if (times.empty()) return;
  if (!(times.front() >= 0.0)) throw PreconditionError(std::string(who) + ": times[0] must be >= 0");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] >= times[i - 1]))
      throw PreconditionError(std::string(who) + ": times must be sorted");
}

// Spectral form of exp(−iHt) applied to ψ0, reused across many output times.
class SpectralPropagator {
 public:
  SpectralPropagator(const HermitianOperator4& h, const Vector4& psi0) {
    if (!h.entries().allFinite()) throw NumericError("evolve_rwa: non-finite Hamiltonian entries");
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(h.entries());
    if (solver.info() != Eigen::Success) throw NumericError("evolve_rwa: eigendecomposition failed");
    vectors_ = solver.eigenvectors();
    values_ = solver.eigenvalues();
    coefficients_ = vectors_.adjoint() * psi0;
  }

  Vector4 at(double t) const {
    Vector4 phased;
    for (int k = 0; k < 4; ++k) phased(k) = std::polar(1.0, -values_(k) * t) * coefficients_(k);
    return vectors_ * phased;
  }

 private:
  Matrix4 vectors_;
  Eigen::Vector4d values_;
  Vector4 coefficients_;
};

std::size_t physical_index(BasisLabel label) { return index_of(kPhysicalBasis, label); }

}  // namespace

std::vector<StateVector> evolve_rwa(const HermitianOperator4& h, const StateVector& psi0,
                                    std::span<const double> times) {
  require_same_basis(h.basis(), psi0.basis(), "evolve_rwa");
  require_times(times, "evolve_rwa");
  const SpectralPropagator propagator(h, psi0.amplitudes());
  std::vector<StateVector> out;
  out.reserve(times.size());
  for (const double t : times) out.emplace_back(propagator.at(t), h.basis(), 1e-12);
  return out;
}

std::vector<StateVector> evolve_lab(const ModelParams& params, const StateVector& psi0,
                                    std::span<const double> times, double tol, LabStats* stats) {
  params.validate(/*allow_zero_epsilon=*/true);
  const Carriers& c = params.require_carriers();
  require_same_basis(kPhysicalBasis, psi0.basis(), "evolve_lab");
  require_times(times, "evolve_lab");
  if (!(tol >= 1e-12 && tol <= 1e-4)) throw PreconditionError("evolve_lab: tol must lie in [1e-12, 1e-4]");

  // Interaction picture of the static level energies: φ = exp(iH₀t)ψ. Exact; the
  // counter-rotating drive terms stay in the equation.
  const std::array<double, 4> levels{c.omega_up0, c.omega_down0, c.omega_up2, c.omega_down2};
  const double w01 = levels[0] - levels[1];
  const double w23 = levels[2] - levels[3];
  const double w02 = levels[0] - levels[2];
  const double oa = params.omega_a, ob = params.omega_b, eps = params.epsilon;
  const double fa = c.omega_field_a, fb = c.omega_field_b;
  const double pa = params.phi_a, pb = params.phi_b;
  const Complex minus_i{0.0, -1.0};

  auto rhs = [=](double t, const ComplexState4& y) {
    const Complex v01 = std::polar(oa * std::cos(fa * t - pa), w01 * t);
    const Complex v23 = std::polar(ob * std::cos(fb * t - pb), w23 * t);
    const Complex v02 = std::polar(eps, w02 * t);
    return ComplexState4{minus_i * (v01 * y[1] + v02 * y[2]),
                         minus_i * (std::conj(v01) * y[0]),
                         minus_i * (std::conj(v02) * y[0] + v23 * y[3]),
                         minus_i * (std::conj(v23) * y[2])};
  };

  double fastest = std::max({std::abs(fa) + std::abs(w01), std::abs(fb) + std::abs(w23), std::abs(w02)});
  OdeOptions options;
  options.rtol = tol;
  options.atol = tol;
  if (fastest > 0.0) options.max_step = 0.25 * 2.0 * std::numbers::pi / fastest;
  DormandPrince45 integrator(options);

  ComplexState4 y0;
  for (int k = 0; k < 4; ++k) y0[k] = psi0.amplitudes()(k);
  OdeStats ode_stats;
  const std::vector<ComplexState4> phis = integrator.integrate(rhs, 0.0, y0, times, &ode_stats);

  const double norm0 = psi0.norm();
  const double drift_limit = std::max(100.0 * tol, 1e-12);
  double max_drift = 0.0;
  std::vector<StateVector> out;
  out.reserve(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    Vector4 psi;
    for (int k = 0; k < 4; ++k) psi(k) = std::polar(1.0, -levels[k] * times[i]) * phis[i][k];
    const double drift = std::abs(psi.norm() - norm0);
    max_drift = std::max(max_drift, drift);
    if (drift > drift_limit) throw NumericError("evolve_lab: norm drift " + std::to_string(drift), times[i]);
    out.emplace_back(psi, kPhysicalBasis, std::max(1e-9, 4.0 * drift_limit));
  }
  if (stats != nullptr) *stats = {ode_stats.accepted, ode_stats.rejected, max_drift};
  return out;
}

std::vector<double> PopulationTrace::column(BasisLabel label) const {
  const std::size_t idx = index_of(basis, label);
  std::vector<double> out(populations.size());
  std::transform(populations.begin(), populations.end(), out.begin(), [idx](const auto& row) { return row[idx]; });
  return out;
}

PopulationTrace populations(std::span<const StateVector> states, std::span<const double> times) {
  if (states.size() != times.size())
    throw PreconditionError("populations: states and times differ in length");
  PopulationTrace trace;
  if (!states.empty()) trace.basis = states.front().basis();
  trace.times.assign(times.begin(), times.end());
  trace.populations.reserve(states.size());
  trace.aux_total.reserve(states.size());
  for (const StateVector& s : states) {
    require_same_basis(trace.basis, s.basis(), "populations");
    std::array<double, 4> row{};
    double aux = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      row[k] = std::norm(s.amplitudes()(static_cast<int>(k)));
      if (is_auxiliary(trace.basis[k])) aux += row[k];
    }
    trace.populations.push_back(row);
    trace.aux_total.push_back(aux);
  }
  return trace;
}

std::vector<double> uniform_times(double horizon, std::size_t samples) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw PreconditionError("horizon must be finite and > 0");
  if (samples < 2) throw PreconditionError("need at least 2 samples");
  std::vector<double> t(samples);
  for (std::size_t n = 0; n < samples; ++n)
    t[n] = horizon * static_cast<double>(n) / static_cast<double>(samples);
  return t;
}

CouplingEstimate extract_effective_coupling(const ModelParams& params, double horizon,
                                            std::size_t samples) {
  params.validate();
  if (samples < 1024) throw PreconditionError("extract_effective_coupling: samples must be >= 1024");
  const std::vector<double> times = uniform_times(horizon, samples);
  const HermitianOperator4 h = build_rwa_hamiltonian(params);
  const SpectralPropagator propagator(h, StateVector::basis_state(kPhysicalBasis, BasisLabel::Down0).amplitudes());

  const int down2 = static_cast<int>(physical_index(BasisLabel::Down2));
  std::vector<double> signal(samples);
  for (std::size_t n = 0; n < samples; ++n) signal[n] = std::norm(propagator.at(times[n])(down2));

  const SpectralPeak peak = find_oscillation_frequency(signal, horizon / static_cast<double>(samples));
  CouplingEstimate est;
  est.method = CouplingMethod::FourierDominant;
  est.resolution = 2.0 * std::numbers::pi / horizon;
  est.spectral_floor = peak.floor;
  est.coherent = peak.found && peak.frequency > est.resolution;
  est.omega_eff = est.coherent ? peak.frequency : 0.0;
  return est;
}

CouplingEstimate analytic_effective_coupling(const ModelParams& params) {
  CouplingEstimate est;
  est.method = CouplingMethod::AnalyticLowestGap;
  est.omega_eff = lowest_transition(params);
  est.resolution = 1e-12 * params.epsilon;
  est.coherent = est.omega_eff > 0.0;
  return est;
}

double max_aux_occupation(const ModelParams& params, double horizon, std::size_t samples) {
  params.validate();
  const std::vector<double> times = uniform_times(horizon, samples);
  if (params.omega_a == 0.0 && params.omega_b == 0.0) return 0.0;  // Down0 is stationary
  const SpectralPropagator propagator(build_rwa_hamiltonian(params),
                                      StateVector::basis_state(kPhysicalBasis, BasisLabel::Down0).amplitudes());
  const int up0 = static_cast<int>(physical_index(BasisLabel::Up0));
  const int up2 = static_cast<int>(physical_index(BasisLabel::Up2));
  double best = 0.0;
  for (const double t : times) {
    const Vector4 psi = propagator.at(t);
    best = std::max(best, std::norm(psi(up0)) + std::norm(psi(up2)));
  }
  return best;
}

}  // namespace nsiq
