#include "dunkl/grid.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/specfn.hpp"

namespace dunkl {

namespace {

// Append a rule for integral over [a,b] of f(x) |x|^{2k} dx, assuming
// 0 is not interior to (a,b). If an endpoint touches 0 the Jacobi weight
// absorbs the |x|^{2k} factor exactly; otherwise it is multiplied in.
void append_panel(MuGrid1D& g, double k, double a, double b, int order) {
  if (a >= b) return;
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  if (k > 0.0 && a == 0.0) {
    // x = half*(1+u), weight (1+u)^{2k}
    const GaussJacobiRule& rule = jacobi_rule(static_cast<std::size_t>(order), 0.0, 2.0 * k);
    double scale = std::pow(half, 2.0 * k + 1.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      g.nodes.push_back(half * (1.0 + rule.nodes[i]));
      g.weights.push_back(scale * rule.weights[i]);
    }
    return;
  }
  if (k > 0.0 && b == 0.0) {
    // x = -half*(1-u), weight (1-u)^{2k}
    const GaussJacobiRule& rule = jacobi_rule(static_cast<std::size_t>(order), 2.0 * k, 0.0);
    double scale = std::pow(half, 2.0 * k + 1.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      g.nodes.push_back(-half * (1.0 - rule.nodes[i]));
      g.weights.push_back(scale * rule.weights[i]);
    }
    return;
  }
  const GaussJacobiRule& rule = jacobi_rule(static_cast<std::size_t>(order), 0.0, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double x = mid + half * rule.nodes[i];
    g.nodes.push_back(x);
    g.weights.push_back(half * rule.weights[i] * std::pow(std::abs(x), 2.0 * k));
  }
}

// Panels on [a,b] with geometric grading toward the endpoint touching 0.
void append_interval(MuGrid1D& g, double k, double a, double b, int panels, int order) {
  if (a >= b) return;
  if (a < 0.0 && b > 0.0) {
    append_interval(g, k, a, 0.0, panels, order);
    append_interval(g, k, 0.0, b, panels, order);
    return;
  }
  std::vector<double> cuts(panels + 1);
  if (a == 0.0) {
    cuts[0] = 0.0;
    for (int p = 1; p <= panels; ++p) cuts[p] = b * std::pow(2.0, p - panels);
  } else if (b == 0.0) {
    cuts[panels] = 0.0;
    for (int p = 0; p < panels; ++p) cuts[p] = a * std::pow(2.0, -p);
  } else {
    for (int p = 0; p <= panels; ++p) cuts[p] = a + (b - a) * p / panels;
  }
  for (int p = 0; p < panels; ++p) append_panel(g, k, cuts[p], cuts[p + 1], order);
}

}  // namespace

MuGrid1D mu_grid_1d(double k, double lo, double hi, int panels_per_side, int order) {
  if (!(lo < hi)) throw std::invalid_argument("mu_grid_1d: need lo < hi");
  MuGrid1D g;
  append_interval(g, k, lo, hi, panels_per_side, order);
  return g;
}

MuGrid1D mu_grid_1d_refined(double k, double lo, double hi, double fine_lo,
                            double fine_hi, int coarse_panels, int fine_panels,
                            int order) {
  fine_lo = std::max(fine_lo, lo);
  fine_hi = std::min(fine_hi, hi);
  if (!(fine_lo < fine_hi)) return mu_grid_1d(k, lo, hi, coarse_panels, order);
  MuGrid1D g;
  append_interval(g, k, lo, fine_lo, coarse_panels, order);
  append_interval(g, k, fine_lo, fine_hi, fine_panels, order);
  append_interval(g, k, fine_hi, hi, coarse_panels, order);
  return g;
}

GridFunction mu_grid_nd(const MultiplicityVector& mult,
                        const std::vector<MuGrid1D>& axes) {
  if (axes.size() != mult.dim())
    throw std::invalid_argument("mu_grid_nd: axis count must match dim");
  GridFunction g;
  std::size_t total = 1;
  for (const auto& ax : axes) total *= ax.size();
  g.nodes.reserve(total);
  g.weights.reserve(total);
  std::vector<std::size_t> idx(axes.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    Point p(axes.size());
    double w = 1.0;
    for (std::size_t j = 0; j < axes.size(); ++j) {
      p[j] = axes[j].nodes[idx[j]];
      w *= axes[j].weights[idx[j]];
    }
    g.nodes.push_back(std::move(p));
    g.weights.push_back(w);
    for (std::size_t j = axes.size(); j-- > 0;) {
      if (++idx[j] < axes[j].size()) break;
      idx[j] = 0;
    }
  }
  g.values.assign(total, Complex(0.0, 0.0));
  return g;
}

GridFunction sample_1d(const MuGrid1D& grid, const std::function<Complex(double)>& f) {
  GridFunction g;
  g.nodes.reserve(grid.size());
  g.weights = grid.weights;
  g.values.reserve(grid.size());
  for (double x : grid.nodes) {
    g.nodes.push_back({x});
    g.values.push_back(f(x));
  }
  return g;
}

GridFunction sample_nd(const GridFunction& skeleton,
                       const std::function<Complex(const Point&)>& f) {
  GridFunction g = skeleton;
  for (std::size_t i = 0; i < g.size(); ++i) g.values[i] = f(g.nodes[i]);
  return g;
}

}  // namespace dunkl
