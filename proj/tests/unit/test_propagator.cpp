#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "nsiq/effective.hpp"
#include "nsiq/errors.hpp"
#include "nsiq/hamiltonians.hpp"
#include "nsiq/propagator.hpp"
#include "nsiq/spectral.hpp"
#include "oracles.hpp"

using namespace nsiq;

namespace {

const double kEps = oracle::khz(200.0);

ModelParams resonant(double omega, double detuning = 0.0) {
  ModelParams p;
  p.epsilon = kEps;
  p.omega_a = p.omega_b = omega;
  p.delta_a = p.delta_b = detuning;
  return p;
}

StateVector down0() { return StateVector::basis_state(kPhysicalBasis, BasisLabel::Down0); }

double coupling_horizon(const ModelParams& p) { return 40.0 * 2 * oracle::kPi / lowest_transition(p); }

}  // namespace

TEST(EvolveRwa, StationaryWithoutCouplings) {
  Matrix4 h = Matrix4::Zero();
  h(0, 0) = 0.3 * kEps;
  h(1, 1) = -0.2 * kEps;
  const std::vector<double> t = uniform_times(1e-3, 50);
  const auto states = evolve_rwa(HermitianOperator4(h, kPhysicalBasis), down0(), t);
  for (const auto& s : states) {
    EXPECT_NEAR(s.population(BasisLabel::Down0), 1.0, 1e-15);
    EXPECT_EQ(s.population(BasisLabel::Up0) + s.population(BasisLabel::Up2) + s.population(BasisLabel::Down2), 0.0);
  }
}

TEST(EvolveRwa, MatchesMatrixExponential) {
  for (int draw = 0; draw < 100; ++draw) {
    oracle::Params o;
    o.eps = kEps * oracle::uniform(0.2, 2.0);
    o.delta = kEps * oracle::uniform(-3.0, 3.0);
    o.oa = kEps * oracle::uniform(0.0, 3.0);
    o.ob = kEps * oracle::uniform(0.0, 3.0);
    o.da = kEps * oracle::uniform(-2.0, 2.0);
    o.db = kEps * oracle::uniform(-2.0, 2.0);
    o.pa = oracle::uniform(-3.0, 3.0);
    o.pb = oracle::uniform(-3.0, 3.0);
    const oracle::M4 h = oracle::rwa_matrix(o);
    const double t = oracle::uniform(0.0, 30.0) / kEps;
    const std::array<double, 1> times{t};
    const auto ours = evolve_rwa(HermitianOperator4(h, kPhysicalBasis), down0(), times);
    const oracle::V4 ref = oracle::propagate_expm(h, down0().amplitudes(), t);
    EXPECT_LT((ours[0].amplitudes() - ref).cwiseAbs().maxCoeff(), 1e-10) << "draw " << draw;
  }
}

TEST(EvolveRwa, MatchesFixedStepRk4) {
  const ModelParams p = resonant(0.4 * kEps, 0.3 * kEps);
  const oracle::M4 h = build_rwa_hamiltonian(p).entries();
  const double t1 = 20.0 / kEps;
  const oracle::V4 ref = oracle::rk4([&](double) { return h; }, down0().amplitudes(), 0.0, t1, 20000);
  const std::array<double, 1> times{t1};
  const auto ours = evolve_rwa(build_rwa_hamiltonian(p), down0(), times);
  EXPECT_LT((ours[0].amplitudes() - ref).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(EvolveRwa, TwoLevelRabiFormula) {
  const double omega = oracle::khz(30.0);
  Matrix4 h = Matrix4::Zero();
  h(0, 1) = h(1, 0) = omega / 2;
  const std::vector<double> t = uniform_times(10 * 2 * oracle::kPi / omega, 400);
  const auto states = evolve_rwa(HermitianOperator4(h, kPhysicalBasis), down0(), t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double c = std::cos(omega * t[i] / 2);
    EXPECT_NEAR(states[i].population(BasisLabel::Down0), c * c, 1e-12);
  }
}

TEST(EvolveRwa, WeakRegimePiPulse) {
  const ModelParams p = resonant(0.15 * kEps);
  const double omega_eff = 0.15 * 0.15 * kEps / 2;
  const std::vector<double> t = uniform_times(2 * oracle::kPi / omega_eff, 4000);
  const auto states = evolve_rwa(build_rwa_hamiltonian(p), down0(), t);
  double best = 0.0, best_t = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (states[i].population(BasisLabel::Down2) > best) {
      best = states[i].population(BasisLabel::Down2);
      best_t = t[i];
    }
  }
  EXPECT_GT(best, 0.99);
  EXPECT_NEAR(best_t * omega_eff / oracle::kPi, 1.0, 0.02);
}

TEST(EvolveRwa, NormAndEnergyConserved) {
  for (int draw = 0; draw < 100; ++draw) {
    ModelParams p = resonant(kEps * oracle::uniform(0.0, 4.0), kEps * oracle::uniform(-2.0, 2.0));
    p.delta = kEps * oracle::uniform(-2.0, 2.0);
    p.omega_b = kEps * oracle::uniform(0.0, 4.0);
    p.phi_a = oracle::uniform(-3.0, 3.0);
    const HermitianOperator4 h = build_rwa_hamiltonian(p);
    Vector4 v;
    for (int k = 0; k < 4; ++k) v(k) = Complex(oracle::uniform(-1, 1), oracle::uniform(-1, 1));
    const StateVector psi0(v.normalized(), kPhysicalBasis);
    const double e0 = h.expectation(psi0.amplitudes());
    const std::vector<double> t = uniform_times(50.0 / kEps, 64);
    for (const auto& s : evolve_rwa(h, psi0, t)) {
      EXPECT_NEAR(s.norm(), 1.0, 1e-12);
      EXPECT_NEAR(h.expectation(s.amplitudes()), e0, 1e-10 * std::max(std::abs(e0), kEps));
    }
  }
}

TEST(EvolveRwa, PhasesLeavePopulationsUnchanged) {
  for (int draw = 0; draw < 20; ++draw) {
    ModelParams p = resonant(kEps * oracle::uniform(0.05, 3.0), kEps * oracle::uniform(-2.0, 2.0));
    p.delta = kEps * oracle::uniform(-2.0, 2.0);
    const std::vector<double> t = uniform_times(200.0 / kEps, 300);
    const auto plain = populations(evolve_rwa(build_rwa_hamiltonian(p), down0(), t), t);
    p.phi_a = oracle::uniform(-oracle::kPi, oracle::kPi);
    p.phi_b = oracle::uniform(-oracle::kPi, oracle::kPi);
    const auto phased = populations(evolve_rwa(build_rwa_hamiltonian(p), down0(), t), t);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (int k = 0; k < 4; ++k) EXPECT_NEAR(plain.populations[i][k], phased.populations[i][k], 1e-9);
  }
}

TEST(EvolveRwa, RejectsMismatchAndUnsortedTimes) {
  const ModelParams p = resonant(0.1 * kEps);
  const StateVector wrong = StateVector::basis_state(kSymmetricBasis, BasisLabel::Down0);
  const std::array<double, 2> t{0.0, 1e-6};
  EXPECT_THROW(evolve_rwa(build_rwa_hamiltonian(p), wrong, t), BasisMismatchError);
  const std::array<double, 2> backwards{1e-6, 0.0};
  EXPECT_THROW(evolve_rwa(build_rwa_hamiltonian(p), down0(), backwards), PreconditionError);
  const std::array<double, 1> negative{-1e-6};
  EXPECT_THROW(evolve_rwa(build_rwa_hamiltonian(p), down0(), negative), PreconditionError);
}

TEST(EvolveLab, UndrivenLevelsOnlyAcquirePhases) {
  ModelParams p;
  p.epsilon = kEps;
  p = with_carriers(p, 20.0 * kEps);
  p.epsilon = 0.0;
  Vector4 v(0.5, Complex(0.0, 0.5), -0.5, 0.5);
  const StateVector psi0(v, kPhysicalBasis);
  const std::vector<double> t = uniform_times(5e-5, 20);
  const auto states = evolve_lab(p, psi0, t, 1e-10);
  const Carriers& c = *p.carriers;
  const std::array<double, 4> levels{c.omega_up0, c.omega_down0, c.omega_up2, c.omega_down2};
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int k = 0; k < 4; ++k)
      EXPECT_LT(std::abs(states[i].amplitudes()(k) - std::polar(1.0, -levels[k] * t[i]) * v(k)), 1e-12);
}

TEST(EvolveLab, MatchesDirectRk4OnLabHamiltonian) {
  ModelParams p = resonant(0.5 * kEps, 0.2 * kEps);
  p.delta = 0.3 * kEps;
  p.delta_b = p.delta_a + 0.1 * kEps;
  p.phi_a = 0.4;
  p.phi_b = -1.1;
  p = with_carriers(p, 8.0 * kEps);
  const double t1 = 6.0 / kEps;
  const oracle::V4 ref =
      oracle::rk4([&](double t) { return build_lab_hamiltonian(p, t).entries(); }, down0().amplitudes(), 0.0, t1, 200000);
  const std::array<double, 1> times{t1};
  const auto ours = evolve_lab(p, down0(), times, 1e-11);
  EXPECT_LT((ours[0].amplitudes() - ref).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(EvolveLab, ApproachesRwaAtLargeCarriers) {
  const ModelParams base = resonant(0.15 * kEps);
  const ModelParams p = with_carriers(base, 200.0 * kEps);
  const double period = 2 * oracle::kPi / lowest_transition(base);
  const std::vector<double> t = uniform_times(0.25 * period, 40);
  LabStats stats;
  const auto lab = populations(evolve_lab(p, down0(), t, 1e-10, &stats), t);
  const auto rwa = populations(evolve_rwa(build_rwa_hamiltonian(base), down0(), t), t);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(lab.populations[i][k], rwa.populations[i][k], 0.02);
  EXPECT_LT(stats.max_norm_drift, 100 * 1e-10);
  EXPECT_GT(stats.accepted_steps, 0u);
}

TEST(EvolveLab, Preconditions) {
  const ModelParams bare = resonant(0.1 * kEps);
  const std::array<double, 1> t{1e-6};
  EXPECT_THROW(evolve_lab(bare, down0(), t), ConfigError);
  const ModelParams p = with_carriers(bare, 10 * kEps);
  EXPECT_THROW(evolve_lab(p, down0(), t, 1e-3), PreconditionError);
  EXPECT_THROW(evolve_lab(p, down0(), t, 1e-13), PreconditionError);
}

TEST(Populations, BasisStatesAndSuperpositions) {
  const std::array<double, 2> t{0.0, 1.0};
  const std::vector<StateVector> unit{down0(), down0()};
  const PopulationTrace a = populations(unit, t);
  EXPECT_EQ(a.column(BasisLabel::Down0), std::vector<double>({1.0, 1.0}));
  EXPECT_EQ(a.column(BasisLabel::Up2), std::vector<double>({0.0, 0.0}));
  const double r = 1 / std::sqrt(2.0);
  const StateVector mix(Vector4(0, r, 0, r), kPhysicalBasis);
  const std::vector<StateVector> mixed{mix, mix};
  const PopulationTrace b = populations(mixed, t);
  EXPECT_NEAR(b.populations[0][1], 0.5, 1e-15);
  EXPECT_NEAR(b.populations[0][3], 0.5, 1e-15);
  EXPECT_EQ(b.aux_total[0], 0.0);
  const std::array<double, 1> short_t{0.0};
  EXPECT_THROW(populations(unit, short_t), PreconditionError);
}

TEST(Extraction, WeakResonantCoupling) {
  const ModelParams p = resonant(0.15 * kEps);
  const CouplingEstimate est = extract_effective_coupling(p, coupling_horizon(p), 4096);
  ASSERT_TRUE(est.coherent);
  EXPECT_EQ(est.method, CouplingMethod::FourierDominant);
  EXPECT_LT(std::abs(est.omega_eff - lowest_transition(p)), est.resolution);
  EXPECT_NEAR(est.omega_eff / (0.15 * 0.15 * kEps / 2), 1.0, 0.01);
}

TEST(Extraction, DetunedInsetCoupling) {
  const double omega = 0.15 * kEps;
  const ModelParams p = resonant(omega, -2.0 * kEps);
  const CouplingEstimate est = extract_effective_coupling(p, coupling_horizon(p), 4096);
  ASSERT_TRUE(est.coherent);
  EXPECT_NEAR(est.omega_eff, omega * omega / (6.0 * kEps), est.resolution + 0.01 * omega * omega / (6.0 * kEps));
}

TEST(Extraction, SweetSpotReachesEpsilon) {
  const ModelParams p = resonant(std::sqrt(3.0) * kEps);
  const CouplingEstimate est = extract_effective_coupling(p, coupling_horizon(p), 4096);
  EXPECT_NEAR(est.omega_eff / kEps, 1.0, 0.02);
}

TEST(Extraction, SaturationBound) {
  for (int draw = 0; draw < 40; ++draw) {
    const ModelParams p = resonant(kEps * oracle::uniform(0.05, 8.0));
    const CouplingEstimate est = extract_effective_coupling(p, coupling_horizon(p), 4096);
    EXPECT_LE(est.omega_eff, 1.02 * kEps);
  }
}

TEST(Extraction, TwoLevelSubCaseWithinResolution) {
  // P(t) from the literal 2×2 Rabi problem, fed to the same peak finder.
  for (int draw = 0; draw < 50; ++draw) {
    const double omega = kEps * oracle::uniform(0.05, 1.0);
    const double detuning = kEps * oracle::uniform(-1.0, 1.0);
    Matrix4 h = Matrix4::Zero();
    h(1, 1) = detuning;
    h(0, 1) = h(1, 0) = omega / 2;
    const double rabi = std::hypot(omega, detuning);
    const double horizon = 40 * 2 * oracle::kPi / rabi;
    const std::vector<double> t = uniform_times(horizon, 4096);
    const auto trace = populations(evolve_rwa(HermitianOperator4(h, kPhysicalBasis), down0(), t), t);
    const SpectralPeak peak = find_oscillation_frequency(trace.column(BasisLabel::Up0), horizon / 4096);
    ASSERT_TRUE(peak.found);
    EXPECT_LT(std::abs(peak.frequency - rabi), peak.resolution);
  }
}

TEST(Extraction, NoTransferWithoutDrive) {
  const ModelParams p = resonant(0.0);
  const CouplingEstimate est = extract_effective_coupling(p, 1e-3, 4096);
  EXPECT_FALSE(est.coherent);
  EXPECT_EQ(est.omega_eff, 0.0);
  EXPECT_THROW(extract_effective_coupling(p, 1e-3, 512), PreconditionError);
}

TEST(Extraction, AnalyticMethod) {
  const ModelParams p = resonant(0.15 * kEps);
  const CouplingEstimate est = analytic_effective_coupling(p);
  EXPECT_EQ(est.method, CouplingMethod::AnalyticLowestGap);
  EXPECT_DOUBLE_EQ(est.omega_eff, lowest_transition(p));
  EXPECT_GT(est.resolution, 0.0);
}

TEST(MaxAux, UndrivenIsExactlyZero) {
  EXPECT_EQ(max_aux_occupation(resonant(0.0), 1e-3, 2048), 0.0);
}

TEST(MaxAux, WeakAndStrongRegimes) {
  const ModelParams weak = resonant(0.15 * kEps);
  const double period = 2 * oracle::kPi / lowest_transition(weak);
  EXPECT_NEAR(max_aux_occupation(weak, 2 * period, 40000), 0.0220, 5e-4);

  const std::vector<double> t = uniform_times(period, 20000);
  const auto trace = populations(evolve_rwa(build_rwa_hamiltonian(weak), down0(), t), t);
  const std::vector<double> down2 = trace.column(BasisLabel::Down2);
  const double peak_down2 = *std::max_element(down2.begin(), down2.end());
  const double peak_aux = *std::max_element(trace.aux_total.begin(), trace.aux_total.end());
  EXPECT_LT(peak_aux, 0.05 * peak_down2);

  const ModelParams strong = resonant(8.0 * kEps);
  EXPECT_GT(max_aux_occupation(strong, 2 * 2 * oracle::kPi / kEps, 40000), 0.5);
}
