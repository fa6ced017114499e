// calibration.hpp
//
// Constants frozen from the brute-force sweeps in tools/msi_calibrate.cpp
// (twice the observed maximum). They make the "<<" bounds assertable at desk
// scale; they are empirical, not asymptotic constants.

#pragma once

namespace msi::calibration {

// sum_{j<q} c(j,q)^2 <= C * min(1, h/q) for q <= 2000, even h <= 200.
// Observed maximum 2.996 at q = 2000, h = 2 (the h = 2 ratio tends to 3).
inline constexpr double square_sum_constant = 5.992;

// |far_delta| + |far_sigma| <= C_far * A * h on the reconstruction grid,
// A in {N, N log N}. Observed maximum 0.1824 at N = 10, h = 2, Q = 12, g = unit.
inline constexpr double far_part_constant = 0.3648;

// Growth exponent standing in for N^eps in the majorant check.
inline constexpr double growth_exponent = 0.2;

}  // namespace msi::calibration
