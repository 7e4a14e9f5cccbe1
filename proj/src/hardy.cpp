#include "dunkl/hardy.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/measure.hpp"

namespace dunkl {

namespace {

double bump01(double s) {  // smooth, supported in (-1,1)
  double u = 1.0 - s * s;
  return u > 0.0 ? std::exp(-1.0 / u) : 0.0;
}

// two nonnegative lobes on [-1,0] and [0,1]
double lobe_left(double s) { return bump01(4.0 * (s + 0.5)); }
double lobe_right(double s) { return bump01(4.0 * (s - 0.5)); }
// odd-shaped profile and the even bump used to cancel its mean
double odd_shape(double s) { return s * bump01(s); }

}  // namespace

Atom make_atom(const MultiplicityVector& mult, const Point& center, double radius,
               AtomProfile profile, int panels, int order) {
  if (!(radius > 0.0)) throw std::invalid_argument("make_atom: radius must be > 0");
  std::size_t n = mult.dim();
  if (center.size() != n) throw std::invalid_argument("make_atom: dim mismatch");
  double hw = radius / std::sqrt(static_cast<double>(n));  // inscribed cube

  std::vector<MuGrid1D> axes(n);
  for (std::size_t j = 0; j < n; ++j)
    axes[j] = mu_grid_1d(mult[j], center[j] - hw, center[j] + hw, panels, order);
  GridFunction g = mu_grid_nd(mult, axes);

  auto envelope = [&](const Point& p) {  // plain bump in coordinates 2..n
    double v = 1.0;
    for (std::size_t j = 1; j < p.size(); ++j) v *= bump01((p[j] - center[j]) / hw);
    return v;
  };
  auto part = [&](const Point& p, bool second) {
    double s = (p[0] - center[0]) / hw;
    double base = profile == AtomProfile::two_bump
                      ? (second ? lobe_right(s) : lobe_left(s))
                      : (second ? bump01(s) : odd_shape(s));
    return base * envelope(p);
  };

  double i1 = 0.0, i2 = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    i1 += g.weights[i] * part(g.nodes[i], false);
    i2 += g.weights[i] * part(g.nodes[i], true);
  }
  // a = p1 - lambda p2 with lambda balancing the dmu-means to zero
  double lambda = i1 / i2;
  double sup = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double v = part(g.nodes[i], false) - lambda * part(g.nodes[i], true);
    g.values[i] = v;
    sup = std::max(sup, std::abs(v));
  }
  BallMeasureContext ctx{mult, {}};
  double vol = mu_ball_nd(ctx, center, radius);
  double scale = 1.0 / (vol * sup);
  for (auto& v : g.values) v *= scale;
  return Atom{Ball{center, radius}, std::move(g)};
}

bool validate_atom(const MultiplicityVector& mult, const Atom& atom, double mean_tol) {
  BallMeasureContext ctx{mult, {}};
  double vol = mu_ball_nd(ctx, atom.ball.center, atom.ball.radius);
  double sup = 0.0;
  for (std::size_t i = 0; i < atom.values.size(); ++i) {
    if (dist(atom.values.nodes[i], atom.ball.center) > atom.ball.radius * (1.0 + 1e-12))
      return false;
    sup = std::max(sup, std::abs(atom.values.values[i]));
  }
  if (sup > (1.0 + 1e-9) / vol) return false;
  double mean = std::abs(atom.values.integral());
  return mean <= mean_tol * std::max(sup * vol, 1.0);
}

std::vector<MuGrid1D> h1_outer_axes(const MultiplicityVector& mult, const Ball& ball,
                                    double R, int coarse_panels, int fine_panels,
                                    int order) {
  std::size_t n = mult.dim();
  double hw = ball.radius / std::sqrt(static_cast<double>(n));
  std::vector<MuGrid1D> axes(n);
  for (std::size_t j = 0; j < n; ++j)
    axes[j] = mu_grid_1d_refined(mult[j], -R, R, ball.center[j] - 3.0 * hw,
                                 ball.center[j] + 3.0 * hw, coarse_panels, fine_panels,
                                 order);
  return axes;
}

double h1_maximal_norm(const MultiplicityVector& mult, const GridFunction& f,
                       const std::vector<double>& ts, const GridFunction& outer) {
  double total = 0.0;
  for (std::size_t i = 0; i < outer.size(); ++i)
    total += outer.weights[i] * maximal_heat(mult, f, ts, outer.nodes[i]);
  return total;
}

double uchiyama_kernel(const MultiplicityVector& mult, const CutoffSpec& spec, double r,
                       const Point& x, const Point& y) {
  BallMeasureContext ctx{mult, {}};
  double rho = radius_for_measure(ctx, x, r);
  return std::exp(log_truncated_kernel_nd(mult, spec, rho * rho, x, y));
}

std::vector<EstimateReport> uchiyama_conditions_scan(const MultiplicityVector& mult,
                                                     const CutoffSpec& spec,
                                                     const std::vector<Point>& xs,
                                                     const std::vector<Point>& ys,
                                                     const std::vector<double>& rs,
                                                     const std::string& grid_id) {
  BallMeasureContext ctx{mult, {}};
  double delta = 1.0 / mult.homogeneous_dim();
  std::vector<EstimateReport> reps(3);
  const char* ids[] = {"hardy.uchiyama_diag", "hardy.uchiyama_upper",
                       "hardy.uchiyama_lip"};
  for (std::size_t i = 0; i < 3; ++i) {
    reps[i].estimate_id = ids[i];
    reps[i].k_config = mult.label();
    reps[i].grid_id = grid_id;
  }
  auto record = [](EstimateReport& r, double v, std::vector<double> where) {
    if (v > r.empirical_constant) {
      r.empirical_constant = v;
      r.worst_case = std::move(where);
    }
  };

  for (double r : rs) {
    for (const Point& x : xs) {
      double rho = radius_for_measure(ctx, x, r);
      double t = rho * rho;
      auto K = [&](const Point& y) {
        return std::exp(log_truncated_kernel_nd(mult, spec, t, x, y));
      };
      record(reps[0], 1.0 / (r * K(x)), {x[0], r});
      for (const Point& y : ys) {
        double dxy = (x == y) ? 0.0 : quasi_distance(ctx, x, y);
        double Kxy = K(y);
        record(reps[1], Kxy * r * std::pow(1.0 + dxy / r, 1.0 + delta),
               {x[0], y[0], r});
        // Lipschitz steps proportional to the local ball scale
        for (double frac : {0.2, 0.04}) {
          for (std::size_t j = 0; j < mult.dim(); ++j) {
            Point yp = y;
            yp[j] += frac * rho;
            double dyy = quasi_distance(ctx, y, yp);
            if (!(dyy > 0.0) || dyy > 0.25 * (r + dxy)) continue;
            double lhs = std::abs(Kxy - K(yp));
            if (lhs == 0.0) continue;
            double v = lhs * r * std::pow(1.0 + dxy / r, 1.0 + 2.0 * delta) *
                       std::pow(r / dyy, delta);
            record(reps[2], v, {x[0], y[0], r, frac * rho});
          }
        }
      }
    }
  }
  return reps;
}

EstimateReport multiplier_atom_bound(double k, const MultiplierSpec& mspec,
                                     const std::vector<Atom>& atoms,
                                     const std::vector<double>& ts,
                                     double hormander_const,
                                     const std::string& grid_id) {
  MultiplicityVector mult({k});
  EstimateReport rep;
  rep.estimate_id = "hardy.multiplier_atom." + mspec.name;
  rep.k_config = mult.label();
  rep.grid_id = grid_id;
  double M = hormander_const > 0.0 ? hormander_const : 1.0;
  for (const Atom& atom : atoms) {
    double B = 8.0 / atom.ball.radius + 4.0;
    MuGrid1D xi_grid = mu_grid_1d(k, -B, B, 5, 10);
    GridFunction Ta = multiplier_apply(k, mspec, atom.values, xi_grid);
    double R = std::max(40.0 * atom.ball.radius,
                        8.0 * (std::abs(atom.ball.center[0]) + atom.ball.radius));
    GridFunction outer = mu_grid_nd(mult, h1_outer_axes(mult, atom.ball, R));
    double norm = h1_maximal_norm(mult, Ta, ts, outer) / M;
    if (norm > rep.empirical_constant) {
      rep.empirical_constant = norm;
      rep.worst_case = {atom.ball.center[0], atom.ball.radius};
    }
  }
  return rep;
}

}  // namespace dunkl
