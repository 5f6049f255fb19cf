#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "nsiq/effective.hpp"
#include "nsiq/errors.hpp"
#include "nsiq/gates.hpp"
#include "oracles.hpp"

using namespace nsiq;

namespace {

const double kEps = oracle::khz(200.0);
const oracle::cd kI{0.0, 1.0};

ModelParams resonant(double omega) {
  ModelParams p;
  p.epsilon = kEps;
  p.omega_a = p.omega_b = omega;
  return p;
}

}  // namespace

TEST(RotationGate, SpecialAngles) {
  EXPECT_LT((rotation_gate(0.0).matrix - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  Eigen::Matrix2cd flip;
  flip << 0.0, kI, kI, 0.0;
  EXPECT_LT((rotation_gate(oracle::kPi).matrix - flip).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(RotationGate, InverseAndUnitary) {
  for (int draw = 0; draw < 100; ++draw) {
    const double theta = oracle::uniform(-10.0, 10.0);
    const Eigen::Matrix2cd r = rotation_gate(theta).matrix;
    EXPECT_LT((r * rotation_gate(-theta).matrix - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((r * r.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Protocol, SpecialAngles) {
  const auto zero = superposition_protocol(0.0).amplitudes;
  EXPECT_LT((zero - Eigen::Vector3cd(0, 1, 0)).cwiseAbs().maxCoeff(), 1e-15);
  const auto pi = superposition_protocol(oracle::kPi).amplitudes;
  EXPECT_LT((pi - Eigen::Vector3cd(0, 0, kI)).cwiseAbs().maxCoeff(), 1e-15);
  const double r = 1 / std::sqrt(2.0);
  const auto half = superposition_protocol(oracle::kPi / 2).amplitudes;
  EXPECT_LT((half - Eigen::Vector3cd(0, r, kI * r)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Protocol, ExactAgainstLiteralProducts) {
  for (int draw = 0; draw < 100; ++draw) {
    const double theta = oracle::uniform(-2 * oracle::kPi, 2 * oracle::kPi);
    const Eigen::Vector3cd start(0, 1, 0);
    const Eigen::Vector3cd literal =
        oracle::protocol_step3() * (oracle::protocol_step2() * (oracle::protocol_step1(theta) * start));
    const Eigen::Vector3cd target(0, std::cos(theta / 2), kI * std::sin(theta / 2));
    const auto steps = superposition_protocol_steps(theta);
    const Eigen::Vector3cd ours = steps[2].state.amplitudes;
    EXPECT_LT((ours - target).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((ours - literal).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((steps[0].gate - oracle::protocol_step1(theta)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((steps[1].gate - oracle::protocol_step2()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((steps[2].gate - oracle::protocol_step3()).cwiseAbs().maxCoeff(), 1e-15);

    const Eigen::Matrix3cd composed = steps[2].gate * steps[1].gate * steps[0].gate;
    EXPECT_LT((composed * composed.adjoint() - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(std::norm(ours(1)) + std::norm(ours(2)), 1.0, 1e-12);
    EXPECT_LT(std::abs(ours(0)), 1e-12);
  }
}

TEST(Protocol, EmbedRejectsRepeatedLevel) {
  EXPECT_THROW(embed(rotation_gate(1.0), ProtocolLabel::Down0, ProtocolLabel::Down0), PreconditionError);
}

TEST(InversionGate, NoDriveNoTransfer) {
  EXPECT_EQ(inversion_gate_fidelity(resonant(0.0), 1e-4).fidelity, 0.0);
  EXPECT_EQ(inversion_gate_fidelity(resonant(0.0)).fidelity, 0.0);
  EXPECT_THROW(inversion_gate_fidelity(resonant(0.1 * kEps), -1.0), PreconditionError);
}

TEST(InversionGate, WeakRegimePiPulse) {
  const ModelParams p = resonant(0.15 * kEps);
  const double omega_eff = std::abs(adiabatic_effective(p).omega_eff);
  EXPECT_GT(inversion_gate_fidelity(p, oracle::kPi / omega_eff).fidelity, 0.99);
  const InversionGate best = inversion_gate_fidelity(p);
  EXPECT_GT(best.fidelity, 0.9999);
  EXPECT_NEAR(best.duration * lowest_transition(p) / oracle::kPi, 1.0, 0.01);
}

TEST(InversionGate, SweetSpotIsBestAndFastest) {
  std::vector<InversionGate> gates;
  const std::vector<double> strengths{0.15, 0.5, 1.0, std::sqrt(3.0), 3.0, 8.0};
  for (double s : strengths) gates.push_back(inversion_gate_fidelity(resonant(s * kEps)));
  const InversionGate sweet = gates[3];
  EXPECT_NEAR(sweet.fidelity, 1.0, 1e-9);
  EXPECT_NEAR(sweet.duration * kEps, oracle::kPi, 1e-4);
  double shortest = sweet.duration;
  for (const InversionGate& g : gates) {
    EXPECT_LE(g.fidelity, sweet.fidelity + 1e-12);
    shortest = std::min(shortest, g.duration);
  }
  EXPECT_LE(sweet.duration, 1.01 * shortest);
}

TEST(SimulatedProtocol, SweetSpotReproducesIdealPopulations) {
  for (double theta : {0.3, oracle::kPi / 2, 2.5}) {
    const SimulatedProtocol sim = simulated_superposition_protocol(theta, resonant(std::sqrt(3.0) * kEps));
    EXPECT_NEAR(sim.amplitudes.squaredNorm(), 1.0, 1e-12);
    EXPECT_GT(sim.population_fidelity, 1.0 - 1e-9);
    EXPECT_LT(sim.aux_leakage, 1e-9);
    EXPECT_LE(sim.fidelity, sim.population_fidelity + 1e-12);
    EXPECT_NEAR(sim.duration * kEps, oracle::kPi, 1e-4);
  }
}

TEST(SimulatedProtocol, WeakRegimeIsFaithful) {
  const SimulatedProtocol sim = simulated_superposition_protocol(1.0, resonant(0.15 * kEps));
  EXPECT_GT(sim.population_fidelity, 0.999);
  EXPECT_LT(sim.aux_leakage, 0.03);
  EXPECT_NEAR(sim.amplitudes.squaredNorm(), 1.0, 1e-12);
}
