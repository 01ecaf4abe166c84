// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace folm {

// Fixed physical constants (CODATA 2018), SI units throughout.
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double speed_of_light = 299792458.0;  // m / s
inline constexpr double mu_0 = 1.25663706212e-6;       // T m / A

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace folm
