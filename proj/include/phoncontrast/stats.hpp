// Small numeric helpers shared across modules.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "phoncontrast/errors.hpp"

namespace phoncontrast {

// Inclusive (linear interpolation) percentile: position q*(n-1) in the
// sorted sample. q in [0,1].
inline double percentile_inclusive(std::vector<double> values, double q) {
  if (values.empty()) throw DataError("percentile of empty sample");
  if (q < 0.0 || q > 1.0) throw ConfigError("percentile rank out of [0,1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const size_t lo = static_cast<size_t>(pos);
  const size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

inline double mean_of(const std::vector<double>& v) {
  if (v.empty()) throw DataError("mean of empty sample");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Weighted least squares slope of y on x. Requires at least two distinct
// x values with positive weight.
inline double wls_slope(const std::vector<double>& x,
                        const std::vector<double>& y,
                        const std::vector<double>& w) {
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    sx += w[i] * x[i];
    sy += w[i] * y[i];
  }
  if (sw <= 0.0) throw DataError("weighted fit with nonpositive total weight");
  const double mx = sx / sw, my = sy / sw;
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    num += w[i] * (x[i] - mx) * (y[i] - my);
    den += w[i] * (x[i] - mx) * (x[i] - mx);
  }
  if (den <= 0.0) throw DataError("weighted fit needs two distinct x values");
  return num / den;
}

}  // namespace phoncontrast
