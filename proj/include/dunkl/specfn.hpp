#pragma once

#include <vector>

#include "dunkl/types.hpp"

namespace dunkl {

/// Parameters of the Kummer function 1F1(a;b;z), restricted to 0 < a < b
/// (the regime all kernel formulas live in).
struct KummerParams {
  double a;
  double b;
  double z;

  KummerParams(double a_, double b_, double z_) : a(a_), b(b_), z(z_) {
    if (!(a > 0.0 && b > a))
      throw std::invalid_argument("KummerParams requires 0 < a < b");
  }
};

/// Thrown when a series strategy fails to reach the machine-precision floor.
struct SeriesError : std::runtime_error {
  double z;
  std::string strategy;
  SeriesError(double z_, std::string strategy_)
      : std::runtime_error("hyp1f1: non-convergent " + strategy_ +
                           " series at z=" + std::to_string(z_)),
        z(z_),
        strategy(std::move(strategy_)) {}
};

// Series/asymptotic switchover; both branches are cross-checked on [25,35].
inline constexpr double kHyp1f1Switch = 30.0;

double hyp1f1(const KummerParams& p);
double hyp1f1(double a, double b, double z);

/// log(1F1(a;b;z)) for 0 < a < b, where the function is strictly positive.
/// Safe against overflow of e^z for large z.
double log_hyp1f1(double a, double b, double z);

/// The two strategies individually (for cross-checking near the switchover):
/// Taylor series (with the Kummer transform for z < 0) and the large-|z|
/// asymptotic series truncated at its smallest term.
double log_hyp1f1_taylor(double a, double b, double z);
double log_hyp1f1_asymptotic(double a, double b, double z);

/// d/dz 1F1(a;b;z) = (a/b) 1F1(a+1;b+1;z)
double hyp1f1_deriv(const KummerParams& p);
double hyp1f1_deriv(double a, double b, double z);

/// One-dimensional Dunkl kernel E_k(x,y) = e^{xy} 1F1(k;2k+1;-2xy),
/// reducing to e^{xy} at k = 0. Strictly positive on the reals.
double dunkl_kernel_1d(double k, double x, double y);
double log_dunkl_kernel_1d(double k, double x, double y);

/// Product Dunkl kernel.
double dunkl_kernel_nd(const MultiplicityVector& mult, const Point& x, const Point& y);

/// E(x, -i xi) via Gauss-Jacobi quadrature of the integral representation.
/// Node count is doubled until the value is stable to 1e-12.
Complex dunkl_kernel_complex_1d(double k, double x, double xi);

/// Leading-order comparator for E_k in the three regimes of |xy|
/// (small, large positive, large negative). Test comparator only.
double asymptotic_envelope(double k, double xy);

/// Gauss-Jacobi rule on [-1,1] for the weight (1-u)^alpha (1+u)^beta,
/// computed by Golub-Welsch eigen-decomposition of the Jacobi matrix.
struct GaussJacobiRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  GaussJacobiRule(std::size_t n, double alpha, double beta);
};

/// Shared immutable cache of quadrature rules (thread-safe).
const GaussJacobiRule& jacobi_rule(std::size_t n, double alpha, double beta);

}  // namespace dunkl
