#include "dunkl/heat.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/measure.hpp"
#include "dunkl/specfn.hpp"

namespace dunkl {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double phi(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }
double phi_deriv(double s) { return s > 0.0 ? std::exp(-1.0 / s) / (s * s) : 0.0; }

double sigma(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double a = phi(u), b = phi(1.0 - u);
  return a / (a + b);
}

double sigma_deriv(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  double a = phi(u), b = phi(1.0 - u);
  double da = phi_deriv(u), db = phi_deriv(1.0 - u);
  return (da * b + a * db) / sq(a + b);
}

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

double SmoothBump::operator()(double s) const {
  if (s <= s0 || s >= s1) return 0.0;
  if (s >= p0 && s <= p1) return 1.0;
  if (s < p0) return sigma((s - s0) / (p0 - s0));
  return sigma((s1 - s) / (s1 - p1));
}

double SmoothBump::deriv(double s) const {
  if (s <= s0 || s >= s1 || (s >= p0 && s <= p1)) return 0.0;
  if (s < p0) return sigma_deriv((s - s0) / (p0 - s0)) / (p0 - s0);
  return -sigma_deriv((s1 - s) / (s1 - p1)) / (s1 - p1);
}

double CutoffSpec::chi(double t, double x, double y) const {
  if (x == 0.0) return 0.0;
  return chi1((x + y) / x) * chi2(t / (x * x));
}

double CutoffSpec::chi_grad_y(double t, double x, double y) const {
  if (x == 0.0) return 0.0;
  return chi1.deriv((x + y) / x) / x * chi2(t / (x * x));
}

SignedLog signed_log_sub(const SignedLog& a, const SignedLog& b) {
  if (b.sign == 0.0) return a;
  if (a.sign == 0.0) return {-b.sign, b.log_abs};
  double L = std::max(a.log_abs, b.log_abs);
  double v = a.sign * std::exp(a.log_abs - L) - b.sign * std::exp(b.log_abs - L);
  if (v == 0.0) return {};
  return {sgn(v), L + std::log(std::abs(v))};
}

double log_heat_norm_const(double k) {
  return (2.0 * k + 1.0) * std::log(2.0) + std::lgamma(k + 0.5);
}

double log_heat_kernel_1d(double k, double t, double x, double y) {
  if (!(t > 0.0)) throw std::invalid_argument("heat kernel: t must be > 0");
  double base = -log_heat_norm_const(k) - (k + 0.5) * std::log(t) - sq(x - y) / (4.0 * t);
  double xy = x * y;
  if (k == 0.0 || xy == 0.0) return base;
  return base + log_hyp1f1(k, 2.0 * k + 1.0, -xy / t);
}

double heat_kernel_1d(double k, double t, double x, double y) {
  return std::exp(log_heat_kernel_1d(k, t, x, y));
}

SignedLog heat_grad_signedlog(double k, double t, double x, double y) {
  if (!(t > 0.0)) throw std::invalid_argument("heat kernel: t must be > 0");
  double prefix = -log_heat_norm_const(k) - (k + 0.5) * std::log(t) - sq(x - y) / (4.0 * t);
  double z = -x * y / t;
  SignedLog a, b;
  if (x != y) {
    a.sign = sgn(x - y);
    a.log_abs = std::log(std::abs(x - y)) - std::log(2.0 * t);
    if (k > 0.0 && z != 0.0) a.log_abs += log_hyp1f1(k, 2.0 * k + 1.0, z);
  }
  if (k > 0.0 && x != 0.0) {
    b.sign = sgn(x);
    b.log_abs = std::log(k / (2.0 * k + 1.0)) + std::log(std::abs(x)) - std::log(t) +
                log_hyp1f1(k + 1.0, 2.0 * k + 2.0, z);
  }
  SignedLog r = signed_log_sub(a, b);
  r.log_abs += prefix;
  return r;
}

double heat_kernel_grad_y(double k, double t, double x, double y) {
  return heat_grad_signedlog(k, t, x, y).value();
}

double log_heat_kernel_nd(const MultiplicityVector& mult, double t, const Point& x,
                          const Point& y) {
  if (x.size() != mult.dim() || y.size() != mult.dim())
    throw std::invalid_argument("heat_kernel_nd: dimension mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < mult.dim(); ++j)
    s += log_heat_kernel_1d(mult[j], t, x[j], y[j]);
  return s;
}

double heat_kernel_nd(const MultiplicityVector& mult, double t, const Point& x,
                      const Point& y) {
  return std::exp(log_heat_kernel_nd(mult, t, x, y));
}

double log_truncated_kernel_1d(double k, const CutoffSpec& spec, double t, double x,
                               double y) {
  double c = spec.chi(t, x, y);
  if (c >= 1.0) return kNegInf;
  return std::log1p(-c) + log_heat_kernel_1d(k, t, x, y);
}

double truncated_kernel_1d(double k, const CutoffSpec& spec, double t, double x,
                           double y) {
  return std::exp(log_truncated_kernel_1d(k, spec, t, x, y));
}

double error_kernel_1d(double k, const CutoffSpec& spec, double t, double x, double y) {
  double c = spec.chi(t, x, y);
  if (c == 0.0) return 0.0;
  return c * heat_kernel_1d(k, t, x, y);
}

SignedLog truncated_grad_signedlog(double k, const CutoffSpec& spec, double t, double x,
                                   double y) {
  double c = spec.chi(t, x, y);
  SignedLog a;
  if (c < 1.0) {
    a = heat_grad_signedlog(k, t, x, y);
    a.log_abs += std::log1p(-c);
  }
  double dc = spec.chi_grad_y(t, x, y);
  SignedLog b;
  if (dc != 0.0) {
    b.sign = sgn(dc);
    b.log_abs = std::log(std::abs(dc)) + log_heat_kernel_1d(k, t, x, y);
  }
  return signed_log_sub(a, b);
}

double log_truncated_kernel_nd(const MultiplicityVector& mult, const CutoffSpec& spec,
                               double t, const Point& x, const Point& y) {
  double s = 0.0;
  for (std::size_t j = 0; j < mult.dim(); ++j) {
    double lj = log_truncated_kernel_1d(mult[j], spec, t, x[j], y[j]);
    if (lj == kNegInf) return kNegInf;
    s += lj;
  }
  return s;
}

double error_kernel_nd(const MultiplicityVector& mult, const CutoffSpec& spec, double t,
                       const Point& x, const Point& y) {
  double lh = log_heat_kernel_nd(mult, t, x, y);
  double lH = log_truncated_kernel_nd(mult, spec, t, x, y);
  if (lH == kNegInf) return std::exp(lh);
  return -std::exp(lh) * std::expm1(lH - lh);
}

Complex heat_apply(const MultiplicityVector& mult, const GridFunction& f, double t,
                   const Point& x) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    acc += f.weights[i] * heat_kernel_nd(mult, t, x, f.nodes[i]) * f.values[i];
  return acc;
}

double maximal_heat(const MultiplicityVector& mult, const GridFunction& f,
                    const std::vector<double>& ts, const Point& x) {
  double m = 0.0;
  for (double t : ts) m = std::max(m, std::abs(heat_apply(mult, f, t, x)));
  return m;
}

std::vector<EstimateReport> global_behavior_scan(double k, const std::vector<double>& xs,
                                                 const std::vector<double>& ys,
                                                 const std::vector<double>& ts,
                                                 const std::string& grid_id) {
  if (!(k > 0.0))
    throw std::invalid_argument("global_behavior_scan: requires k > 0 (k = 0 is Gaussian)");
  std::vector<EstimateReport> reps(6);
  const char* ids[] = {"heat.global_upper",    "heat.global_lower",
                       "heat.diag_upper",      "heat.diag_lower",
                       "heat.antidiag_upper",  "heat.antidiag_lower"};
  std::string label = MultiplicityVector({k}).label();
  for (std::size_t i = 0; i < 6; ++i) {
    reps[i].estimate_id = ids[i];
    reps[i].k_config = label;
    reps[i].grid_id = grid_id;
  }
  auto record = [](EstimateReport& r, double v, std::initializer_list<double> where) {
    if (v > r.empirical_constant) {
      r.empirical_constant = v;
      r.worst_case = where;
    }
  };
  for (double t : ts) {
    for (double x : xs) {
      for (double y : ys) {
        double lh = log_heat_kernel_1d(k, t, x, y);
        double xy = x * y, lcomp;
        if (std::abs(xy) <= t) {
          lcomp = -(k + 0.5) * std::log(t) - (x * x + y * y) / (4.0 * t);
        } else if (xy > 0.0) {
          lcomp = -0.5 * std::log(t) - k * std::log(xy) - sq(x - y) / (4.0 * t);
        } else {
          lcomp = 0.5 * std::log(t) - (k + 1.0) * std::log(-xy) - sq(x + y) / (4.0 * t);
        }
        double r = lh - lcomp;
        record(reps[0], std::exp(r), {x, y, t});
        record(reps[1], std::exp(-r), {x, y, t});
      }
      double vol = mu_ball_1d(k, x, std::sqrt(t));
      double diag = std::exp(log_heat_kernel_1d(k, t, x, x)) * vol;
      record(reps[2], diag, {x, t});
      record(reps[3], 1.0 / diag, {x, t});
      double anti =
          std::exp(log_heat_kernel_1d(k, t, x, -x)) * vol * (t + x * x) / t;
      record(reps[4], anti, {x, t});
      record(reps[5], 1.0 / anti, {x, t});
    }
  }
  return reps;
}

std::vector<EstimateReport> truncated_gaussian_scan(const MultiplicityVector& mult,
                                                    const CutoffSpec& spec, double c,
                                                    const std::vector<Point>& xs,
                                                    const std::vector<Point>& ys,
                                                    const std::vector<double>& ts,
                                                    const std::string& grid_id) {
  if (!(c > 0.0)) throw std::invalid_argument("truncated_gaussian_scan: c must be > 0");
  BallMeasureContext ctx{mult, {}};
  std::size_t n = mult.dim();

  std::vector<EstimateReport> reps(6);
  const char* ids[] = {"heat.trunc_diag_upper", "heat.trunc_diag_lower",
                       "heat.trunc_gauss",      "heat.trunc_grad",
                       "heat.trunc_lip",        "heat.trunc_lip_gauss"};
  for (std::size_t i = 0; i < 6; ++i) {
    reps[i].estimate_id = ids[i];
    reps[i].k_config = mult.label();
    reps[i].grid_id = grid_id;
  }
  auto record = [](EstimateReport& r, double v, const Point& x, const Point& y, double t,
                   double extra = std::numeric_limits<double>::quiet_NaN()) {
    if (v > r.empirical_constant) {
      r.empirical_constant = v;
      r.worst_case.clear();
      r.worst_case.insert(r.worst_case.end(), x.begin(), x.end());
      r.worst_case.insert(r.worst_case.end(), y.begin(), y.end());
      r.worst_case.push_back(t);
      if (!std::isnan(extra)) r.worst_case.push_back(extra);
    }
  };

  auto log_trunc = [&](const Point& x, const Point& y, double t) {
    return log_truncated_kernel_nd(mult, spec, t, x, y);
  };

  for (double t : ts) {
    double sqt = std::sqrt(t);
    for (const Point& x : xs) {
      double vol = mu_ball_nd(ctx, x, sqt);
      double lvol = std::log(vol);

      // on-diagonal two-sided bound (the cutoff vanishes at y = x)
      double ldiag = log_trunc(x, x, t) + lvol;
      record(reps[0], std::exp(ldiag), x, x, t);
      record(reps[1], std::exp(-ldiag), x, x, t);

      for (const Point& y : ys) {
        double d2 = sq(dist(x, y));
        double gauss = d2 / (c * t);

        double lH = log_trunc(x, y, t);
        if (lH != kNegInf) record(reps[2], std::exp(lH + lvol + gauss), x, y, t);

        // gradient in y: product rule over the coordinates, log-sum norm
        std::vector<double> lH1(n), lgrad(n);
        for (std::size_t j = 0; j < n; ++j) {
          lH1[j] = log_truncated_kernel_1d(mult[j], spec, t, x[j], y[j]);
          lgrad[j] = truncated_grad_signedlog(mult[j], spec, t, x[j], y[j]).log_abs;
        }
        double lmax = kNegInf;
        std::vector<double> comp(n, kNegInf);
        for (std::size_t j = 0; j < n; ++j) {
          double s = lgrad[j];
          for (std::size_t i = 0; i < n && s != kNegInf; ++i)
            if (i != j) s = (lH1[i] == kNegInf) ? kNegInf : s + lH1[i];
          comp[j] = s;
          lmax = std::max(lmax, s);
        }
        if (lmax != kNegInf) {
          double acc = 0.0;
          for (double s : comp)
            if (s != kNegInf) acc += std::exp(2.0 * (s - lmax));
          double lnorm = lmax + 0.5 * std::log(acc);
          record(reps[3], std::exp(lnorm + 0.5 * std::log(t) + lvol + gauss), x, y, t);
        }

        // Lipschitz differences along each coordinate, steps <= d(x,y)/2
        double d = std::sqrt(d2);
        if (d == 0.0) continue;
        for (double frac : {0.25, 0.05}) {
          double delta = frac * d;
          for (std::size_t j = 0; j < n; ++j) {
            Point yp = y;
            yp[j] += delta;
            double l2 = log_trunc(x, yp, t);
            double L = std::max(lH, l2);
            if (L == kNegInf) continue;
            double diff = std::exp(lH - L) - std::exp(l2 - L);
            if (diff == 0.0) continue;
            double ldh = L + std::log(std::abs(diff));
            double base = ldh + 0.5 * std::log(t) + lvol - std::log(delta);
            record(reps[4], std::exp(base), x, y, t, delta);
            record(reps[5], std::exp(base + gauss), x, y, t, delta);
          }
        }
      }
    }
  }
  return reps;
}

double q_star_l1_scan(const MultiplicityVector& mult, const CutoffSpec& spec,
                      const Point& y, const GridFunction& xgrid,
                      const std::vector<double>& ts) {
  double total = 0.0;
  for (std::size_t i = 0; i < xgrid.size(); ++i) {
    double m = 0.0;
    for (double t : ts)
      m = std::max(m, error_kernel_nd(mult, spec, t, xgrid.nodes[i], y));
    total += xgrid.weights[i] * m;
  }
  return total;
}

double grad_l1_scan(double k, double t, double y, int panels, int order) {
  double sqt = std::sqrt(t);
  double R = std::abs(y) + 20.0 * sqt + 1.0;
  double w = 8.0 * sqt;
  std::vector<double> cuts{-R, R, 0.0, y - w, y + w, -y - w, -y + w};
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = std::max(cuts[i], -R), b = std::min(cuts[i + 1], R);
    if (!(a < b)) continue;
    int np = std::clamp(static_cast<int>(std::ceil((b - a) / (2.0 * sqt))), 2, panels);
    MuGrid1D g = mu_grid_1d(k, a, b, np, order);
    for (std::size_t q = 0; q < g.size(); ++q)
      total += g.weights[q] * std::abs(heat_kernel_grad_y(k, t, g.nodes[q], y));
  }
  return sqt * total;
}

}  // namespace dunkl
