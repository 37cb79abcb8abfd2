// Weighted feature distance between segments.
#pragma once

#include <array>
#include <cmath>

#include "phoncontrast/errors.hpp"
#include "phoncontrast/features.hpp"

namespace phoncontrast {

using WeightVector = std::array<double, kNumFeatures>;

inline constexpr double kTieEpsilon = 1e-9;

// Normalized weighted L1 distance: sum_i w_i * |a_i - b_i| / (2 * sum_i w_i).
// Values lie in [0,1]. Throws ConfigError when all weights are zero.
inline double feat_distance(const FeatureVector& a, const FeatureVector& b,
                            const WeightVector& w) {
  double num = 0.0, wsum = 0.0;
  for (int i = 0; i < kNumFeatures; ++i) {
    num += w[i] * std::abs(static_cast<int>(a[i]) - static_cast<int>(b[i]));
    wsum += w[i];
  }
  if (wsum <= 0.0) throw ConfigError("all-zero weight vector");
  return num / (2.0 * wsum);
}

}  // namespace phoncontrast
