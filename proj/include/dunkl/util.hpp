#pragma once

#include <cmath>
#include <vector>

namespace dunkl {

inline std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  for (std::size_t i = 0; i < count; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return v;
}

inline std::vector<double> logspace(double lo, double hi, std::size_t count) {
  std::vector<double> v = linspace(std::log(lo), std::log(hi), count);
  for (double& x : v) x = std::exp(x);
  return v;
}

inline double rel_err(double a, double b) {
  double denom = std::max(std::abs(a), std::abs(b));
  return denom == 0.0 ? 0.0 : std::abs(a - b) / denom;
}

}  // namespace dunkl
