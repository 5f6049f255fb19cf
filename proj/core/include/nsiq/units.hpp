#pragma once

#include <numbers>

namespace nsiq {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Internal frequencies are angular (rad/s); external interfaces use kHz.
inline constexpr double khz_to_rad_s(double khz) { return khz * (kTwoPi * 1e3); }
inline constexpr double rad_s_to_khz(double rad_s) { return rad_s / (kTwoPi * 1e3); }

inline constexpr double us_to_s(double us) { return us * 1e-6; }
inline constexpr double s_to_us(double s) { return s * 1e6; }

}  // namespace nsiq
