#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "nsiq/errors.hpp"
#include "nsiq/spectral.hpp"
#include "oracles.hpp"

using namespace nsiq;

namespace {

std::vector<double> tones(std::size_t n, double dt, std::initializer_list<std::pair<double, double>> parts) {
  std::vector<double> s(n, 0.3);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [amp, w] : parts) s[i] += amp * std::cos(w * dt * static_cast<double>(i));
  return s;
}

}  // namespace

TEST(Spectral, SingleToneWithinResolution) {
  const std::size_t n = 4096;
  for (int draw = 0; draw < 100; ++draw) {
    const double horizon = 1.0;
    const double dt = horizon / n;
    const double w = 2 * oracle::kPi * oracle::uniform(20.0, 400.0);
    const SpectralPeak peak = find_oscillation_frequency(tones(n, dt, {{0.5, w}}), dt);
    ASSERT_TRUE(peak.found);
    EXPECT_NEAR(peak.resolution, 2 * oracle::kPi / horizon, 1e-12);
    EXPECT_LT(std::abs(peak.frequency - w), peak.resolution);
  }
}

TEST(Spectral, PrefersLowestSignificantPeak) {
  const std::size_t n = 4096;
  const double dt = 1.0 / n;
  const double low = 2 * oracle::kPi * 40.0, high = 2 * oracle::kPi * 160.0;
  const SpectralPeak both = find_oscillation_frequency(tones(n, dt, {{0.6, low}, {1.0, high}}), dt);
  ASSERT_TRUE(both.found);
  EXPECT_NEAR(both.frequency, low, both.resolution);
  const SpectralPeak faint = find_oscillation_frequency(tones(n, dt, {{0.3, low}, {1.0, high}}), dt);
  ASSERT_TRUE(faint.found);
  EXPECT_NEAR(faint.frequency, high, faint.resolution);
}

TEST(Spectral, ConstantSignalHasNoPeak) {
  const std::vector<double> flat(2048, 0.25);
  const SpectralPeak peak = find_oscillation_frequency(flat, 1e-3);
  EXPECT_FALSE(peak.found);
  EXPECT_EQ(peak.frequency, 0.0);
}

TEST(Spectral, NoiseStaysBelowFloorCriterion) {
  std::vector<double> noise(4096);
  for (double& x : noise) x = oracle::uniform(-1.0, 1.0);
  const SpectralPeak peak = find_oscillation_frequency(noise, 1e-3);
  EXPECT_FALSE(peak.found);
  EXPECT_GT(peak.floor, 0.0);
}

TEST(Spectral, RejectsBadInput) {
  const std::vector<double> tiny(8, 0.0);
  EXPECT_THROW(find_oscillation_frequency(tiny, 1.0), PreconditionError);
  const std::vector<double> ok(64, 0.0);
  EXPECT_THROW(find_oscillation_frequency(ok, 0.0), PreconditionError);
  std::vector<double> bad(64, 0.0);
  bad[3] = std::nan("");
  EXPECT_THROW(find_oscillation_frequency(bad, 1.0), NumericError);
}
