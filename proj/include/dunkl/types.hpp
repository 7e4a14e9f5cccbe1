#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

using Point = std::vector<double>;
using Complex = std::complex<double>;

/// Multiplicity parameters k = (k_1,...,k_n), one per coordinate.
/// The homogeneous dimension N = n + 2*sum(k_j) is always recomputed.
class MultiplicityVector {
 public:
  explicit MultiplicityVector(std::vector<double> k) : k_(std::move(k)) {
    if (k_.empty()) throw std::invalid_argument("multiplicity vector must be non-empty");
    for (double kj : k_)
      if (!(kj >= 0.0)) throw std::invalid_argument("multiplicities must be >= 0");
  }
  MultiplicityVector(std::initializer_list<double> k)
      : MultiplicityVector(std::vector<double>(k)) {}

  std::size_t dim() const { return k_.size(); }
  double operator[](std::size_t j) const { return k_[j]; }
  const std::vector<double>& coeffs() const { return k_; }

  double homogeneous_dim() const {
    double s = 0.0;
    for (double kj : k_) s += 2.0 * kj;
    return static_cast<double>(k_.size()) + s;
  }

  std::string label() const {
    std::string s;
    for (std::size_t j = 0; j < k_.size(); ++j) {
      if (j) s += ",";
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%g", k_[j]);
      s += buf;
    }
    return s;
  }

 private:
  std::vector<double> k_;
};

struct Ball {
  Point center;
  double radius;  // > 0
};

/// A function sampled on a quadrature grid for the weighted measure:
/// integrals against d(mu) are sum(weights[i] * values[i]); the measure
/// density |x|^{2k} is folded into the weights.
struct GridFunction {
  std::vector<Point> nodes;
  std::vector<double> weights;
  std::vector<Complex> values;

  std::size_t size() const { return nodes.size(); }

  Complex integral() const {
    Complex s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * values[i];
    return s;
  }
  double norm_l1() const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * std::abs(values[i]);
    return s;
  }
  double norm_l2() const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * std::norm(values[i]);
    return std::sqrt(s);
  }
};

/// Result of one grid scan: the empirical constant for an estimate,
/// where it was attained, and pass/fail against the frozen value.
struct EstimateReport {
  std::string estimate_id;
  std::string k_config;
  std::string grid_id;
  double empirical_constant = 0.0;
  std::vector<double> worst_case;  // parameter tuple at the extremum
  std::optional<double> frozen_constant;
  enum class Status { pass, fail, pinning } status = Status::pinning;

  // fail iff a frozen value exists and the empirical value regressed > 5%
  void judge() {
    if (!frozen_constant) {
      status = Status::pinning;
    } else {
      status = empirical_constant > 1.05 * (*frozen_constant) ? Status::fail : Status::pass;
    }
  }
};

inline double sq(double x) { return x * x; }

inline double dist(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += sq(a[j] - b[j]);
  return std::sqrt(s);
}

}  // namespace dunkl
