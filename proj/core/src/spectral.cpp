#include "nsiq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <numeric>
#include <vector>

#include <fftw3.h>

#include "nsiq/errors.hpp"

namespace nsiq {
namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<double> magnitude_spectrum(std::vector<double> samples) {
  const std::size_t n = samples.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), samples.data(),
                                reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw NumericError("find_oscillation_frequency: FFT planning failed");
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  std::vector<double> mags(out.size());
  std::transform(out.begin(), out.end(), mags.begin(), [](auto z) { return std::abs(z); });
  return mags;
}

}  // namespace

SpectralPeak find_oscillation_frequency(std::span<const double> signal, double dt,
                                        const PeakOptions& options) {
  const std::size_t n = signal.size();
  if (n < 16) throw PreconditionError("find_oscillation_frequency: need at least 16 samples");
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw PreconditionError("find_oscillation_frequency: dt must be finite and > 0");

  SpectralPeak peak;
  peak.resolution = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);

  const double mean = std::accumulate(signal.begin(), signal.end(), 0.0) / static_cast<double>(n);
  std::vector<double> windowed(n);
  double power = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = signal[i] - mean;
    if (!std::isfinite(x)) throw NumericError("find_oscillation_frequency: non-finite sample");
    power += x * x;
    const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                          static_cast<double>(n - 1));
    windowed[i] = w * x;
  }
  // Rounding-level wiggle is not an oscillation.
  if (std::sqrt(power / static_cast<double>(n)) < 1e-12) return peak;

  const std::vector<double> mags = magnitude_spectrum(std::move(windowed));
  const std::size_t last = mags.size() - 1;

  std::vector<double> tail(mags.begin() + 1, mags.end());
  std::nth_element(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(tail.size() / 2), tail.end());
  peak.floor = tail[tail.size() / 2];

  std::vector<std::size_t> maxima;
  double strongest = 0.0;
  for (std::size_t k = std::max<std::size_t>(options.guard_bins + 1, 1); k < last; ++k) {
    if (mags[k] >= mags[k - 1] && mags[k] > mags[k + 1]) {
      maxima.push_back(k);
      strongest = std::max(strongest, mags[k]);
    }
  }
  if (maxima.empty() || !(strongest > options.floor_factor * peak.floor)) return peak;

  const auto chosen = *std::find_if(maxima.begin(), maxima.end(), [&](std::size_t k) {
    return mags[k] >= options.significance * strongest;
  });

  const double a = mags[chosen - 1];
  const double b = mags[chosen];
  const double c = mags[chosen + 1];
  const double denom = a - 2.0 * b + c;
  const double offset = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;

  peak.frequency = (static_cast<double>(chosen) + offset) * peak.resolution;
  peak.magnitude = b;
  peak.found = true;
  return peak;
}

}  // namespace nsiq
