#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "nsiq/errors.hpp"

namespace nsiq {

using ComplexState4 = std::array<std::complex<double>, 4>;

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-10;
  double initial_step = 0.0;  // 0 picks a step from the first derivative
  double max_step = 0.0;      // 0 means unbounded
  std::size_t max_steps = 500'000'000;
};

struct OdeStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t evaluations = 0;
};

/// Adaptive Dormand–Prince 5(4) for y' = f(t, y) on four complex components
/// (eight real unknowns). The error norm is the RMS over the real and
/// imaginary parts scaled by atol + rtol·max(|y|, |y_new|). Output at `times`
/// comes from steps clipped to land on each requested time.
class DormandPrince45 {
 public:
  explicit DormandPrince45(OdeOptions options = {}) : options_(options) {}

  template <class Rhs>
  std::vector<ComplexState4> integrate(Rhs&& rhs, double t0, const ComplexState4& y0,
                                       std::span<const double> times, OdeStats* stats = nullptr);

 private:
  OdeOptions options_;
};

namespace detail {

inline ComplexState4 axpy(const ComplexState4& y, double h,
                          std::initializer_list<std::pair<double, const ComplexState4*>> terms) {
  ComplexState4 out = y;
  for (const auto& [coef, k] : terms) {
    const double hc = h * coef;
    for (std::size_t i = 0; i < 4; ++i) out[i] += hc * (*k)[i];
  }
  return out;
}

}  // namespace detail

template <class Rhs>
std::vector<ComplexState4> DormandPrince45::integrate(Rhs&& rhs, double t0,
                                                      const ComplexState4& y0,
                                                      std::span<const double> times,
                                                      OdeStats* stats) {
  // Dormand & Prince (1980) tableau, 5th-order solution propagated (FSAL).
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  // b − b̂ (5th minus embedded 4th order weights).
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  OdeStats local;
  std::vector<ComplexState4> out;
  out.reserve(times.size());

  double t = t0;
  ComplexState4 y = y0;
  ComplexState4 k1 = rhs(t, y);
  ++local.evaluations;

  const double rtol = options_.rtol;
  const double atol = options_.atol;

  double h = options_.initial_step;
  if (h <= 0.0) {
    double dnorm = 0.0;
    for (const auto& v : k1) dnorm = std::max(dnorm, std::abs(v));
    h = dnorm > 0.0 ? 0.01 * std::pow(rtol, 0.2) / dnorm : 1e-6;
  }

  constexpr double kSafety = 0.9;
  constexpr double kMinFactor = 0.2;
  constexpr double kMaxFactor = 5.0;

  for (const double target : times) {
    if (target < t) throw PreconditionError("DormandPrince45: output times must be sorted and ≥ t0");
    while (t < target) {
      if (local.accepted + local.rejected >= options_.max_steps)
        throw NumericError("DormandPrince45: step budget exhausted", t);
      if (options_.max_step > 0.0) h = std::min(h, options_.max_step);

      const double remaining = target - t;
      const bool last = h >= remaining;
      const double step = last ? remaining : h;
      if (step <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0) &&
          !last)
        throw NumericError("DormandPrince45: step size underflow", t);

      const ComplexState4 k2 = rhs(t + c2 * step, detail::axpy(y, step, {{a21, &k1}}));
      const ComplexState4 k3 = rhs(t + c3 * step, detail::axpy(y, step, {{a31, &k1}, {a32, &k2}}));
      const ComplexState4 k4 =
          rhs(t + c4 * step, detail::axpy(y, step, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
      const ComplexState4 k5 = rhs(
          t + c5 * step, detail::axpy(y, step, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
      const ComplexState4 k6 =
          rhs(t + step, detail::axpy(y, step,
                                     {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
      const ComplexState4 y_new = detail::axpy(
          y, step, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
      const ComplexState4 k7 = rhs(t + step, y_new);
      local.evaluations += 6;

      double err2 = 0.0;
      for (std::size_t i = 0; i < 4; ++i) {
        const std::complex<double> e =
            step * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sre = atol + rtol * std::max(std::abs(y[i].real()), std::abs(y_new[i].real()));
        const double sim = atol + rtol * std::max(std::abs(y[i].imag()), std::abs(y_new[i].imag()));
        err2 += (e.real() / sre) * (e.real() / sre) + (e.imag() / sim) * (e.imag() / sim);
      }
      const double err = std::sqrt(err2 / 8.0);

      if (!std::isfinite(err)) throw NumericError("DormandPrince45: non-finite error estimate", t);

      if (err <= 1.0) {
        t = last ? target : t + step;
        y = y_new;
        k1 = k7;
        ++local.accepted;
        const double factor =
            err == 0.0 ? kMaxFactor
                       : std::clamp(kSafety * std::pow(err, -0.2), kMinFactor, kMaxFactor);
        // A step clipped to hit the output time says nothing about the natural step.
        if (!last || factor < 1.0) h = step * factor;
      } else {
        ++local.rejected;
        h = step * std::max(kMinFactor, kSafety * std::pow(err, -0.2));
        if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0))
          throw NumericError("DormandPrince45: step size underflow", t);
      }
    }
    out.push_back(y);
  }

  if (stats != nullptr) *stats = local;
  return out;
}

}  // namespace nsiq
