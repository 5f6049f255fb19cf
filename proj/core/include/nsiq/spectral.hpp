#pragma once

#include <cstddef>
#include <span>

namespace nsiq {

struct PeakOptions {
  /// Lowest peak whose magnitude reaches this fraction of the strongest peak wins.
  double significance = 0.5;
  /// A peak must exceed this multiple of the median magnitude to count.
  double floor_factor = 10.0;
  /// Bins 0..guard_bins are ignored (DC leakage through the Hann main lobe).
  std::size_t guard_bins = 2;
};

struct SpectralPeak {
  double frequency = 0.0;  // angular, rad per time unit of `dt`
  double magnitude = 0.0;
  double floor = 0.0;      // median magnitude over the non-DC bins
  double resolution = 0.0; // 2π/(n·dt)
  bool found = false;
};

/// Angular frequency of the slow oscillation in a uniformly sampled real
/// signal: mean removed, Hann window, FFT, then the lowest-frequency local
/// maximum reaching `significance` × the strongest one, refined by quadratic
/// interpolation of the three bins around it.
SpectralPeak find_oscillation_frequency(std::span<const double> signal, double dt,
                                        const PeakOptions& options = {});

}  // namespace nsiq
