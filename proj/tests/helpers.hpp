#pragma once

#include <cmath>

#include "qrisk/rng.hpp"

namespace qrisk::test {

// Absolute-or-relative closeness: absolute for small magnitudes, relative
// once values grow past 1.
inline bool close(double a, double b, double tol) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol * scale;
}

inline bool close_abs(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline double uniform(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.uniform01();
}

}  // namespace qrisk::test
