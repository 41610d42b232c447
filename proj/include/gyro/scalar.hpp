#pragma once

#include <cmath>

#include "gyro/errors.hpp"

namespace gyro {

/// Collinear addition law shared by the disk and ball norms (c = 1):
/// s ⊕ t = (s + t) / (1 + st). Strictly increasing in both arguments on
/// [0,1), closed in [0,1).
inline double scalar_add(double s, double t) { return (s + t) / (1.0 + s * t); }

/// The unique s in (0,1) with s ⊕ s = r. Written as r / (1 + sqrt(1 - r^2))
/// which stays accurate for r near 0 (the algebraically equal form
/// (1 - sqrt(1 - r^2)) / r cancels catastrophically there).
inline double half_radius(double r) {
    if (!(r > 0.0 && r < 1.0)) throw input_error("half_radius: r must lie in (0,1)");
    return r / (1.0 + std::sqrt((1.0 - r) * (1.0 + r)));
}

} // namespace gyro
