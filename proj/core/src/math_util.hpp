#pragma once

#include <cmath>

namespace xdiscord::detail {

// x ln x with the 0 ln 0 = 0 convention; eigenvalue-like quantities in
// [-1e-12, 0) are clamped to zero upstream, so x <= 0 maps to 0 here.
inline double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

inline double sq(double x) { return x * x; }

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;
inline constexpr double kLn2 = 0.69314718055994530942;

}  // namespace xdiscord::detail
