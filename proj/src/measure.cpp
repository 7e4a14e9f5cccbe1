#include "dunkl/measure.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/specfn.hpp"

namespace dunkl {

namespace {

// antiderivative of |y|^{2k}
double weight_antideriv(double k, double y) {
  double p = 2.0 * k + 1.0;
  return std::copysign(std::pow(std::abs(y), p) / p, y);
}

// integral of g over [lo,hi] with Gauss-Legendre panels, split at 0
double panel_integrate(const std::function<double(double)>& g, double lo, double hi,
                       int panels, int order) {
  std::vector<double> cuts{lo};
  if (lo < 0.0 && hi > 0.0) cuts.push_back(0.0);
  cuts.push_back(hi);
  const GaussJacobiRule& rule = jacobi_rule(static_cast<std::size_t>(order), 0.0, 0.0);
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    double a = cuts[c], b = cuts[c + 1];
    for (int p = 0; p < panels; ++p) {
      double pa = a + (b - a) * p / panels;
      double pb = a + (b - a) * (p + 1) / panels;
      double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        total += half * rule.weights[i] * g(mid + half * rule.nodes[i]);
    }
  }
  return total;
}

// mu of the section of B(x,r) over the coordinates j..n-1, recursive
double mu_ball_rec(const BallMeasureContext& ctx, const Point& x, double r,
                   std::size_t j, int order) {
  double k = ctx.mult[j];
  if (j + 1 == ctx.mult.dim()) return mu_ball_1d(k, x[j], r);
  // substitute z_j = x_j + r sin(theta); the section radius r cos(theta)
  // vanishes smoothly at the endpoints
  auto g = [&](double theta) {
    double s = std::sin(theta), c = std::cos(theta);
    double zj = x[j] + r * s;
    return r * c * std::pow(std::abs(zj), 2.0 * k) *
           mu_ball_rec(ctx, x, r * c, j + 1, order);
  };
  // split at the theta where z_j crosses 0, if any
  double lo = -1.5707963267948966, hi = 1.5707963267948966;
  double total = 0.0;
  double u = -x[j] / r;
  if (u > -1.0 && u < 1.0) {
    double tc = std::asin(u);
    total += panel_integrate(g, lo, tc, ctx.quadrature.panels, order);
    total += panel_integrate(g, tc, hi, ctx.quadrature.panels, order);
  } else {
    total += panel_integrate(g, lo, hi, ctx.quadrature.panels, order);
  }
  return total;
}

}  // namespace

double mu_ball_1d(double k, double x, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("mu_ball_1d: radius must be > 0");
  return weight_antideriv(k, x + r) - weight_antideriv(k, x - r);
}

double mu_ball_nd(const BallMeasureContext& ctx, const Point& x, double r) {
  if (x.size() != ctx.mult.dim()) throw std::invalid_argument("mu_ball_nd: dim mismatch");
  if (!(r > 0.0)) throw std::invalid_argument("mu_ball_nd: radius must be > 0");
  if (ctx.mult.dim() == 1) return mu_ball_1d(ctx.mult[0], x[0], r);
  int order = std::max(16, ctx.quadrature.order);
  double v = mu_ball_rec(ctx, x, r, 0, order);
  for (int attempt = 0; attempt < 3; ++attempt) {
    double v2 = mu_ball_rec(ctx, x, r, 0, 2 * order);
    if (std::abs(v2 - v) <= ctx.quadrature.tol * std::abs(v2)) return v2;
    v = v2;
    order *= 2;
  }
  throw std::runtime_error("mu_ball_nd: quadrature did not converge");
}

double quasi_distance(const BallMeasureContext& ctx, const Point& x, const Point& y) {
  if (x.size() != y.size()) throw std::invalid_argument("quasi_distance: dim mismatch");
  double d = dist(x, y);
  if (d == 0.0) return 0.0;

  auto ball_measure_at = [&](double s) {
    Point z(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) z[j] = x[j] + s * (y[j] - x[j]);
    double r = std::max(s, 1.0 - s) * d;
    return mu_ball_nd(ctx, z, r);
  };

  // coarse scan to bracket the minimizer, then golden-section refinement
  const int coarse = 33;
  double best_s = 0.5, best_v = ball_measure_at(0.5);
  for (int i = 0; i <= coarse; ++i) {
    double s = static_cast<double>(i) / coarse;
    double v = ball_measure_at(s);
    if (v < best_v) {
      best_v = v;
      best_s = s;
    }
  }
  double a = std::max(0.0, best_s - 1.0 / coarse);
  double b = std::min(1.0, best_s + 1.0 / coarse);
  const double phi = 0.6180339887498949;
  double c1 = b - phi * (b - a), c2 = a + phi * (b - a);
  double f1 = ball_measure_at(c1), f2 = ball_measure_at(c2);
  while (b - a > 1e-8) {
    if (f1 < f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - phi * (b - a);
      f1 = ball_measure_at(c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + phi * (b - a);
      f2 = ball_measure_at(c2);
    }
  }
  return std::min(f1, f2);
}

double radius_for_measure(const BallMeasureContext& ctx, const Point& x, double r_target) {
  if (!(r_target > 0.0))
    throw std::invalid_argument("radius_for_measure: target must be > 0");
  double lo = 1.0, hi = 1.0;
  while (mu_ball_nd(ctx, x, lo) >= r_target) lo *= 0.5;
  while (mu_ball_nd(ctx, x, hi) <= r_target) hi *= 2.0;
  for (int i = 0; i < 100 && (hi - lo) > 1e-12 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (mu_ball_nd(ctx, x, mid) < r_target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double quasi_ball_measure_1d(double k, double x, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("quasi_ball_measure_1d: r must be > 0");
  BallMeasureContext ctx{MultiplicityVector({k}), {}};
  auto boundary = [&](double dir) {
    double lo = 0.0, hi = 1.0;
    while (quasi_distance(ctx, {x}, {x + dir * hi}) <= r) hi *= 2.0;
    for (int i = 0; i < 80; ++i) {
      double mid = 0.5 * (lo + hi);
      (quasi_distance(ctx, {x}, {x + dir * mid}) <= r ? lo : hi) = mid;
    }
    return x + dir * 0.5 * (lo + hi);
  };
  double right = boundary(1.0), left = boundary(-1.0);
  double p = 2.0 * k + 1.0;
  auto A = [&](double y) { return std::copysign(std::pow(std::abs(y), p) / p, y); };
  return A(right) - A(left);
}

EstimateReport volume_ratio_scan(double k, double epsilon, const std::vector<double>& xs,
                                 const std::vector<double>& ys,
                                 const std::vector<double>& ts,
                                 const std::string& grid_id) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("volume_ratio_scan: epsilon > 0");
  EstimateReport rep;
  rep.estimate_id = "measure.volume_ratio";
  rep.k_config = MultiplicityVector({k}).label();
  rep.grid_id = grid_id;
  for (double t : ts)
    for (double x : xs)
      for (double y : ys) {
        double ratio = mu_ball_1d(k, x, std::sqrt(t)) / mu_ball_1d(k, y, std::sqrt(t));
        double v = ratio * std::exp(-epsilon * sq(x - y) / t);
        if (v > rep.empirical_constant) {
          rep.empirical_constant = v;
          rep.worst_case = {x, y, t};
        }
      }
  return rep;
}

std::vector<EstimateReport> doubling_ratio_scan(const BallMeasureContext& ctx,
                                                const std::vector<Point>& xs,
                                                const std::vector<double>& rs,
                                                const std::vector<double>& Rs,
                                                const std::string& grid_id) {
  double n = static_cast<double>(ctx.mult.dim());
  double N = ctx.mult.homogeneous_dim();
  EstimateReport lower, upper;
  lower.estimate_id = "measure.doubling_lower";
  upper.estimate_id = "measure.doubling_upper";
  for (EstimateReport* r : {&lower, &upper}) {
    r->k_config = ctx.mult.label();
    r->grid_id = grid_id;
  }
  for (const Point& x : xs)
    for (double r : rs)
      for (double R : Rs) {
        if (R <= r) continue;
        double ratio = mu_ball_nd(ctx, x, R) / mu_ball_nd(ctx, x, r);
        double lo = std::pow(R / r, n) / ratio;  // bounded iff ratio >~ (R/r)^n
        double hi = ratio / std::pow(R / r, N);  // bounded iff ratio <~ (R/r)^N
        if (lo > lower.empirical_constant) {
          lower.empirical_constant = lo;
          lower.worst_case = {x[0], r, R};
        }
        if (hi > upper.empirical_constant) {
          upper.empirical_constant = hi;
          upper.worst_case = {x[0], r, R};
        }
      }
  return {lower, upper};
}

}  // namespace dunkl
