// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

namespace icqkd {

inline constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

// Protocol angles. Alice's analyzer is fixed at +45 deg; Bob toggles between
// +-45 deg, and the source modulates +-90 deg onto the vertical mode.
inline constexpr double kTheta45 = deg2rad(45.0);
inline constexpr double kThetaMinus45 = deg2rad(-45.0);
inline constexpr double kPhi90 = deg2rad(90.0);
inline constexpr double kPhiMinus90 = deg2rad(-90.0);

inline bool same_angle(double a, double b, double tol_deg = 1e-9) {
  return std::abs(rad2deg(a) - rad2deg(b)) < tol_deg;
}

}  // namespace icqkd
