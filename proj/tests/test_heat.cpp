#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dunkl/grid.hpp"
#include "dunkl/heat.hpp"
#include "dunkl/util.hpp"

using namespace dunkl;

namespace {

constexpr double kPi = 3.14159265358979323846;

double gauss_heat(double t, double x, double y) {
  return std::exp(-sq(x - y) / (4 * t)) / std::sqrt(4 * kPi * t);
}

// 1D Dunkl Laplacian of h_t(x, y) in x by finite differences
double laplacian_x(double k, double t, double x, double y, double h) {
  auto f = [&](double u) { return heat_kernel_1d(k, t, u, y); };
  double d2 = (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) -
               f(x - 2 * h)) /
              (12 * h * h);
  double d1 =
      (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
  return d2 + (2 * k / x) * d1 - (k / (x * x)) * (f(x) - f(-x));
}

}  // namespace

TEST_CASE("mass conservation at 48 parameter combinations") {
  for (double k : {0.0, 0.3, 0.7, 1.5})
    for (double t : {0.01, 0.5, 10.0})
      for (double x : {0.0, 0.5, 2.0, -1.0}) {
        double L = std::abs(x) + 14 * std::sqrt(t) + 1;
        MuGrid1D g = mu_grid_1d(k, -L, L, 14, 20);
        double mass = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
          mass += g.weights[i] * heat_kernel_1d(k, t, x, g.nodes[i]);
        CHECK(std::abs(mass - 1.0) <= 1e-8);
      }
}

TEST_CASE("semigroup property") {
  for (double k : {0.0, 0.7, 1.5}) {
    double s = 0.5, t = 0.7;
    MuGrid1D g = mu_grid_1d(k, -16.0, 16.0, 16, 20);
    for (double x : {0.0, 1.0})
      for (double y : {-0.5, 2.0}) {
        double conv = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
          conv += g.weights[i] * heat_kernel_1d(k, s, x, g.nodes[i]) *
                  heat_kernel_1d(k, t, g.nodes[i], y);
        double ref = heat_kernel_1d(k, s + t, x, y);
        CHECK(std::abs(conv - ref) <= 1e-6 * ref);
      }
  }
}

TEST_CASE("heat equation residual") {
  for (double k : {0.3, 0.7, 1.5})
    for (double x : {0.7, 1.5})
      for (double y : {-1.0, 0.4, 2.0}) {
        double t = 0.5;
        double ht = 1e-4, hx = 1e-3;
        double dt = (heat_kernel_1d(k, t + ht, x, y) -
                     heat_kernel_1d(k, t - ht, x, y)) /
                    (2 * ht);
        double lap = laplacian_x(k, t, x, y, hx);
        CHECK(dt == doctest::Approx(lap).epsilon(1e-4));
      }
}

TEST_CASE("k = 0 reduces to the classical Gaussian kernel") {
  for (double t : {0.01, 1.0, 100.0})
    for (double x : {-3.0, 0.0, 0.5})
      for (double y : {-1.0, 2.0}) {
        double ref = gauss_heat(t, x, y);
        CHECK(std::abs(heat_kernel_1d(0.0, t, x, y) - ref) <= 1e-12 * ref);
      }
}

TEST_CASE("symmetry and rescaling") {
  for (double k : {0.3, 1.5}) {
    double N = 1 + 2 * k;
    for (double t : {0.1, 2.0})
      for (double x : {0.4, -1.2})
        for (double y : {1.0, 3.0}) {
          double h = heat_kernel_1d(k, t, x, y);
          CHECK(h == doctest::Approx(heat_kernel_1d(k, t, y, x)).epsilon(1e-12));
          double lam = 1.6;
          double hs = heat_kernel_1d(k, lam * lam * t, lam * x, lam * y);
          CHECK(hs == doctest::Approx(std::pow(lam, -N) * h).epsilon(1e-11));
        }
  }
}

TEST_CASE("truncation: H + Q = h exactly, and the cutoff plateau") {
  CutoffSpec spec;
  for (double k : {0.0, 0.7})
    for (double t : {0.05, 1.0})
      for (double x : {-2.0, 0.0, 0.8})
        for (double y : {-1.0, 1.5}) {
          double h = heat_kernel_1d(k, t, x, y);
          double H = truncated_kernel_1d(k, spec, t, x, y);
          double Q = error_kernel_1d(k, spec, t, x, y);
          CHECK(H + Q == doctest::Approx(h).epsilon(1e-14));
          CHECK(H >= 0.0);
        }
  // plateau: chi = 1 when (x+y)/x in [-1, 1/2] and t/x^2 in [0, 1/2]
  CHECK(spec.chi(0.5, 2.0, -3.0) == 1.0);   // (x+y)/x = -1/2, t/x^2 = 1/8
  CHECK(spec.chi(1.0, -2.0, 2.5) == 1.0);   // (x+y)/x = -1/4, t/x^2 = 1/4
  CHECK(spec.chi(0.1, 0.0, 1.0) == 0.0);    // vanishes at x = 0
  CHECK(spec.chi(5.0, 2.0, -3.0) == 0.0);   // t/x^2 = 5/4 outside support
  CHECK(spec.chi(0.5, 2.0, 3.0) == 0.0);    // same signs: (x+y)/x = 5/2
}

TEST_CASE("error kernel support for y = 1") {
  CutoffSpec spec;
  // Q_t(x, 1) != 0 requires x in (-3, -1/3) and t < x^2 < 9
  for (double x : {-4.0, -0.3, 0.5, 2.0})
    CHECK(error_kernel_1d(0.7, spec, 0.01, x, 1.0) == 0.0);
  for (double t : {9.5, 20.0})
    CHECK(error_kernel_1d(0.7, spec, t, -2.9, 1.0) == 0.0);
  CHECK(error_kernel_1d(0.7, spec, 0.5, -1.0, 1.0) > 0.0);
}

TEST_CASE("analytic y-gradient matches finite differences") {
  CutoffSpec spec;
  for (double k : {0.0, 0.7, 1.5})
    for (double t : {0.1, 1.0})
      for (double x : {-1.5, 0.6})
        for (double y : {-0.8, 0.3, 2.0}) {
          double h = 1e-5;
          double fd = (heat_kernel_1d(k, t, x, y + h) -
                       heat_kernel_1d(k, t, x, y - h)) /
                      (2 * h);
          CHECK(heat_kernel_grad_y(k, t, x, y) == doctest::Approx(fd).epsilon(1e-7));
          double fdH = (truncated_kernel_1d(k, spec, t, x, y + h) -
                        truncated_kernel_1d(k, spec, t, x, y - h)) /
                       (2 * h);
          double gH = truncated_grad_signedlog(k, spec, t, x, y).value();
          CHECK(gH == doctest::Approx(fdH).epsilon(1e-6));
        }
}

TEST_CASE("product error kernel expands into cut-off cross terms") {
  MultiplicityVector mult({0.7, 1.2});
  CutoffSpec spec;
  for (double t : {0.2, 2.0}) {
    Point x{-1.0, 0.5}, y{1.2, -0.7};
    double H1 = truncated_kernel_1d(0.7, spec, t, x[0], y[0]);
    double Q1 = error_kernel_1d(0.7, spec, t, x[0], y[0]);
    double H2 = truncated_kernel_1d(1.2, spec, t, x[1], y[1]);
    double Q2 = error_kernel_1d(1.2, spec, t, x[1], y[1]);
    double ref = Q1 * H2 + H1 * Q2 + Q1 * Q2;
    double P = error_kernel_nd(mult, spec, t, x, y);
    CHECK(P == doctest::Approx(ref).epsilon(1e-11));
  }
}

TEST_CASE("heat semigroup is an approximation of the identity") {
  MultiplicityVector mult({0.7});
  // node spacing must resolve the kernel width sqrt(t)
  MuGrid1D g = mu_grid_1d(0.7, -8.0, 8.0, 50, 14);
  GridFunction f = sample_1d(g, [](double x) {
    return Complex(std::exp(-x * x));
  });
  for (double x : {0.3, 1.0}) {
    Complex v = heat_apply(mult, f, 1e-3, {x});
    CHECK(std::abs(v - std::exp(-x * x)) <= 5e-3);
  }
  // and maximal_heat dominates each single time
  std::vector<double> ts = logspace(1e-3, 10.0, 20);
  for (double x : {0.0, 0.5}) {
    double m = maximal_heat(mult, f, ts, {x});
    for (double t : ts) CHECK(m >= std::abs(heat_apply(mult, f, t, {x})) - 1e-15);
  }
}

TEST_CASE("gradient L1 norm: k = 0 closed form 1/sqrt(pi)") {
  for (double t : {0.01, 1.0, 50.0})
    for (double y : {0.0, 2.0})
      CHECK(grad_l1_scan(0.0, t, y) ==
            doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-3));
  // k > 0: uniformly bounded and scale-invariant in t for y = 0
  for (double k : {0.7, 1.5}) {
    double a = grad_l1_scan(k, 0.1, 0.0);
    double b = grad_l1_scan(k, 10.0, 0.0);
    CHECK(a == doctest::Approx(b).epsilon(1e-8));
    CHECK(a < 10.0);
  }
}

TEST_CASE("global behavior scan rejects k = 0") {
  CHECK_THROWS_AS(global_behavior_scan(0.0, {1.0}, {1.0}, {1.0}, "t"),
                  std::invalid_argument);
}
