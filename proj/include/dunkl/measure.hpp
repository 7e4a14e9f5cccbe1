#pragma once

#include "dunkl/types.hpp"

namespace dunkl {

struct QuadratureSpec {
  int panels = 4;
  int order = 32;
  double tol = 1e-6;

  /// Truncation radius beyond which a Gaussian factor e^{-x^2/(4t)} has
  /// tail mass below the requested tolerance (with margin for the
  /// polynomial weight |x|^{2k}).
  double truncation_radius(double t, double k, double tolerance) const {
    double log_inv = std::log(1.0 / tolerance) + 8.0 * (1.0 + k);
    return 2.0 * std::sqrt(t * log_inv) + 1.0;
  }
};

struct BallMeasureContext {
  MultiplicityVector mult;
  QuadratureSpec quadrature;
};

/// mu(B(x,r)) in dimension 1, by the exact antiderivative of |y|^{2k}.
double mu_ball_1d(double k, double x, double r);

/// mu(B(x,r)) for the product measure; closed form for n=1, tensor
/// quadrature over ball sections for n >= 2 (relative accuracy ~1e-6,
/// checked internally by order doubling).
double mu_ball_nd(const BallMeasureContext& ctx, const Point& x, double r);

/// Quasi-distance: infimum of mu(B) over closed balls containing x and y,
/// with centers restricted to the segment [x,y] (exact for n=1).
double quasi_distance(const BallMeasureContext& ctx, const Point& x, const Point& y);

/// Inverse of r -> mu(B(x, r)): the radius sqrt(t) with
/// mu(B(x, sqrt(t))) = r_target, located by bisection.
double radius_for_measure(const BallMeasureContext& ctx, const Point& x, double r_target);

/// mu of the quasi-ball {y : quasi_distance(x,y) <= r} in dimension 1
/// (comparable to r). The boundary points are located by bisection, using
/// that the quasi-distance grows monotonically away from x on either side.
double quasi_ball_measure_1d(double k, double x, double r);

/// Empirical constant in mu(B(x,sqrt(t)))/mu(B(y,sqrt(t))) <= C e^{eps (x-y)^2/t}.
EstimateReport volume_ratio_scan(double k, double epsilon,
                                 const std::vector<double>& xs,
                                 const std::vector<double>& ys,
                                 const std::vector<double>& ts,
                                 const std::string& grid_id);

/// Empirical constants in (R/r)^n <~ mu(B(x,R))/mu(B(x,r)) <~ (R/r)^N.
/// Returns {lower-bound report, upper-bound report}.
std::vector<EstimateReport> doubling_ratio_scan(const BallMeasureContext& ctx,
                                                const std::vector<Point>& xs,
                                                const std::vector<double>& rs,
                                                const std::vector<double>& Rs,
                                                const std::string& grid_id);

}  // namespace dunkl
