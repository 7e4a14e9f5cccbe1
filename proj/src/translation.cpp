#include "dunkl/translation.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/specfn.hpp"

namespace dunkl {

namespace {

constexpr double kPi = 3.14159265358979323846;

double prefactor(double k) {
  return std::exp(std::lgamma(k + 0.5) - 0.5 * std::log(kPi) -
                  2.0 * k * std::log(2.0) - std::lgamma(k));
}

// Smooth part of nu(x,y,z) |z|^{2k}: everything except the Jacobi endpoint
// weight ((d-s)(s-c))^{k-1} in s = |z|.
double smooth_part(double k, double x, double y, double z, double c, double d) {
  double s = std::abs(z);
  double P = (x + y + z) * (-x + y + z) * (x - y + z);
  double edge = std::pow((d + s) * (s + c), k - 1.0);
  double xy = x * y;
  return prefactor(k) * P * (z > 0.0 ? 1.0 : -1.0) * edge /
         (xy * std::pow(std::abs(xy), 2.0 * k - 1.0));
}

// Touching intervals (|x| = |y|): the density near s = 0 combines to
// (d-s)^{k-1} s^{2k-1} times a smooth factor (P carries one power of s),
// handled exactly by a (k-1, 2k-1) Jacobi rule on [0, d].
double smooth_part_c0(double k, double x, double y, double z, double d) {
  double s = std::abs(z);
  double P_over_s = (x + y + z) * (-x + y + z) * (x - y + z) / s;
  double xy = x * y;
  return prefactor(k) * P_over_s * (z > 0.0 ? 1.0 : -1.0) *
         std::pow(d + s, k - 1.0) / (xy * std::pow(std::abs(xy), 2.0 * k - 1.0));
}

// integral of f(z) d nu_{x,y}(z) over both support intervals, k > 0, x,y != 0
Complex nu_quadrature(double k, double x, double y, int order,
                      const std::function<Complex(double)>& f) {
  double c = std::abs(std::abs(x) - std::abs(y));
  double d = std::abs(x) + std::abs(y);
  Complex acc = 0.0;
  if (c == 0.0) {
    const GaussJacobiRule& rule = jacobi_rule(static_cast<std::size_t>(order),
                                              k - 1.0, 2.0 * k - 1.0);
    double half = 0.5 * d;
    double scale = std::pow(half, 3.0 * k - 1.0);
    for (double sign : {1.0, -1.0})
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double z = sign * half * (1.0 + rule.nodes[i]);
        acc += scale * rule.weights[i] * smooth_part_c0(k, x, y, z, d) * f(z);
      }
    return acc;
  }
  const GaussJacobiRule& rule = jacobi_rule(static_cast<std::size_t>(order),
                                            k - 1.0, k - 1.0);
  double mid = 0.5 * (c + d), half = 0.5 * (d - c);
  double scale = std::pow(half, 2.0 * k - 1.0);
  for (double sign : {1.0, -1.0}) {
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double s = mid + half * rule.nodes[i];
      double z = sign * s;
      acc += scale * rule.weights[i] * smooth_part(k, x, y, z, c, d) * f(z);
    }
  }
  return acc;
}

}  // namespace

double nu_density(double k, double x, double y, double z) {
  if (!(k > 0.0)) throw std::invalid_argument("nu_density: requires k > 0");
  if (x == 0.0 || y == 0.0)
    throw std::invalid_argument("nu_density: Dirac case, no density");
  double c = std::abs(std::abs(x) - std::abs(y));
  double d = std::abs(x) + std::abs(y);
  double s = std::abs(z);
  if (s <= c || s >= d) return 0.0;
  double jac = std::pow((d - s) * (s - c), k - 1.0);
  // strip the |z|^{2k} measure factor off the smooth part
  return smooth_part(k, x, y, z, c, d) * jac / std::pow(s, 2.0 * k);
}

Complex translate_1d(double k, const std::function<Complex(double)>& f, double y,
                     double x, int order) {
  if (k == 0.0) return f(x + y);
  if (x == 0.0) return f(y);
  if (y == 0.0) return f(x);
  return nu_quadrature(k, x, y, order, f);
}

Complex translate(const MultiplicityVector& mult,
                  const std::function<Complex(const Point&)>& f, const Point& y,
                  const Point& x, int order) {
  if (x.size() != mult.dim() || y.size() != mult.dim())
    throw std::invalid_argument("translate: dimension mismatch");
  std::size_t n = mult.dim();
  // peel off coordinates recursively; Dirac factors fix z_j directly
  std::function<Complex(std::size_t, Point&)> rec = [&](std::size_t j,
                                                        Point& z) -> Complex {
    if (j == n) return f(z);
    double kj = mult[j];
    auto inner = [&](double zj) {
      z[j] = zj;
      return rec(j + 1, z);
    };
    if (kj == 0.0) return inner(x[j] + y[j]);
    if (x[j] == 0.0) return inner(y[j]);
    if (y[j] == 0.0) return inner(x[j]);
    return nu_quadrature(kj, x[j], y[j], order, inner);
  };
  Point z(n);
  return rec(0, z);
}

GridFunction convolve(const MultiplicityVector& mult,
                      const std::function<Complex(const Point&)>& f,
                      const GridFunction& g, const GridFunction& out_skeleton,
                      int order) {
  GridFunction out = out_skeleton;
  for (std::size_t q = 0; q < out.size(); ++q) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      Point my = g.nodes[i];
      for (double& c : my) c = -c;
      acc += g.weights[i] * g.values[i] * translate(mult, f, my, out.nodes[q], order);
    }
    out.values[q] = acc;
  }
  return out;
}

double nu_total_mass_1d(double k, double x, double y, int order) {
  if (k == 0.0 || x == 0.0 || y == 0.0) return 1.0;
  return nu_quadrature(k, x, y, order, [](double) { return Complex(1.0); }).real();
}

double total_variation_1d(double k, double x, double y, int order) {
  if (k == 0.0 || x == 0.0 || y == 0.0) return 1.0;
  double c = std::abs(std::abs(x) - std::abs(y));
  double d = std::abs(x) + std::abs(y);
  double acc = 0.0;
  if (c == 0.0) {
    const GaussJacobiRule& rule = jacobi_rule(static_cast<std::size_t>(order),
                                              k - 1.0, 2.0 * k - 1.0);
    double half = 0.5 * d;
    double scale = std::pow(half, 3.0 * k - 1.0);
    for (double sign : {1.0, -1.0})
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double z = sign * half * (1.0 + rule.nodes[i]);
        acc += scale * rule.weights[i] * std::abs(smooth_part_c0(k, x, y, z, d));
      }
    return acc;
  }
  const GaussJacobiRule& rule = jacobi_rule(static_cast<std::size_t>(order),
                                            k - 1.0, k - 1.0);
  double mid = 0.5 * (c + d), half = 0.5 * (d - c);
  double scale = std::pow(half, 2.0 * k - 1.0);
  for (double sign : {1.0, -1.0})
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double z = sign * (mid + half * rule.nodes[i]);
      acc += scale * rule.weights[i] * std::abs(smooth_part(k, x, y, z, c, d));
    }
  return acc;
}

double orbit_tail_ratio(double k, const std::function<Complex(double)>& f,
                        double f_support_radius, double y, double r, double delta,
                        int order) {
  if (!(r > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("orbit_tail_ratio: r, delta must be > 0");
  double ay = std::abs(y);
  double Rf = f_support_radius;

  // denominator || (1+|z|)^delta f ||_{L1(dmu)}
  MuGrid1D fg = mu_grid_1d(k, -Rf, Rf, 8, order);
  double denom = 0.0;
  for (std::size_t i = 0; i < fg.size(); ++i)
    denom += fg.weights[i] *
             std::pow(1.0 + std::abs(fg.nodes[i]), delta) * std::abs(f(fg.nodes[i]));
  if (denom == 0.0) return 0.0;

  // tau_{-y} f(x) vanishes unless ||x|-|y|| <= Rf; intersect that shell
  // with the complement of the orbit O(y,r) = { ||x|-|y|| <= r }
  double tail = 0.0;
  auto add_interval = [&](double a, double b) {
    if (!(a < b)) return;
    MuGrid1D g = mu_grid_1d(k, a, b, 6, order);
    for (std::size_t i = 0; i < g.size(); ++i)
      tail += g.weights[i] *
              std::abs(translate_1d(k, f, -y, g.nodes[i], 2 * order));
  };
  if (r < Rf) {
    for (double sign : {1.0, -1.0}) {
      double lo = sign > 0.0 ? ay + r : -(ay + Rf);
      double hi = sign > 0.0 ? ay + Rf : -(ay + r);
      add_interval(lo, hi);
      double ilo = sign > 0.0 ? std::max(0.0, ay - Rf) : -(ay - r);
      double ihi = sign > 0.0 ? ay - r : -std::max(0.0, ay - Rf);
      if (ay - r > 0.0) add_interval(ilo, ihi);
    }
  }
  return std::pow(r, delta) * tail / denom;
}

}  // namespace dunkl
