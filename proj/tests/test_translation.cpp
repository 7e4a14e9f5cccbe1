#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dunkl/grid.hpp"
#include "dunkl/heat.hpp"
#include "dunkl/specfn.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"
#include "dunkl/util.hpp"

using namespace dunkl;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kGridPts[] = {-2.5, -1.0, -0.3, 0.3, 1.0, 2.5};
}  // namespace

TEST_CASE("translation preserves total mass") {
  for (double k : {0.3, 0.7, 1.5, 2.5})
    for (double x : kGridPts)
      for (double y : kGridPts)
        CHECK(std::abs(nu_total_mass_1d(k, x, y) - 1.0) <= 1e-8);
}

TEST_CASE("degenerate translations") {
  auto f = [](double z) { return Complex(std::cos(z) + 0.3 * z); };
  for (double k : {0.0, 0.7}) {
    CHECK(std::abs(translate_1d(k, f, 0.0, 1.3) - f(1.3)) == 0.0);
    CHECK(std::abs(translate_1d(k, f, -0.8, 0.0) - f(-0.8)) == 0.0);
  }
  // k = 0 is the ordinary shift
  CHECK(std::abs(translate_1d(0.0, f, 0.7, 1.1) - f(1.8)) == 0.0);
}

TEST_CASE("two-path agreement against the transform definition") {
  for (double k : {0.3, 0.7, 1.5}) {
    auto gauss = [](double z) { return Complex(std::exp(-0.5 * z * z)); };
    MuGrid1D g = mu_grid_1d(k, -9.0, 9.0, 8, 16);
    GridFunction f = sample_1d(g, gauss);
    GridFunction fh = dunkl_transform(k, f, g);
    double cnorm = std::exp(-log_transform_const(k));
    for (auto [x, y] : std::vector<std::pair<double, double>>{
             {0.5, 1.0}, {1.0, -2.0}, {2.0, 0.7}, {1.0, 1.0}, {1.0, -1.0}}) {
      Complex via_nu = translate_1d(k, gauss, y, x, 64);
      Complex via_f = 0.0;
      for (std::size_t i = 0; i < fh.size(); ++i) {
        double xi = fh.nodes[i][0];
        via_f += fh.weights[i] * fh.values[i] *
                 std::conj(dunkl_kernel_complex_1d(k, x, xi)) *
                 std::conj(dunkl_kernel_complex_1d(k, y, xi));
      }
      via_f *= cnorm;
      CHECK(std::abs(via_nu - via_f) <= 1e-5);
    }
  }
}

TEST_CASE("translation density: symmetries and support") {
  for (double k : {0.3, 1.5})
    for (double x : {0.7, -1.8})
      for (double y : {1.1, 2.4}) {
        double c = std::abs(std::abs(x) - std::abs(y));
        double d = std::abs(x) + std::abs(y);
        for (double z : {c + 0.1 * (d - c), c + 0.6 * (d - c)}) {
          double v = nu_density(k, x, y, z);
          // nu is symmetric in (x, y) and invariant under (x,y,z) -> (-z,y,-x)
          CHECK(v == doctest::Approx(nu_density(k, y, x, z)).epsilon(1e-12));
          CHECK(v == doctest::Approx(nu_density(k, -z, y, -x)).epsilon(1e-12));
        }
        // vanishes off the two support intervals
        CHECK(nu_density(k, x, y, 0.5 * c) == 0.0);
        CHECK(nu_density(k, x, y, d + 0.1) == 0.0);
        CHECK(nu_density(k, x, y, -(d + 0.1)) == 0.0);
      }
  CHECK_THROWS_AS(nu_density(0.0, 1.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(nu_density(0.7, 0.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("total variation dominates the mass and stays bounded") {
  for (double k : {0.3, 0.7, 1.5, 2.5})
    for (double x : kGridPts)
      for (double y : kGridPts) {
        double tv = total_variation_1d(k, x, y);
        CHECK(tv >= 1.0 - 1e-8);
        CHECK(tv <= 4.0);
      }
}

TEST_CASE("heat kernel is the translate of its zero slice") {
  for (double k : {0.3, 0.7, 2.5}) {
    double t = 0.4;
    auto slice = [&](double z) { return Complex(heat_kernel_1d(k, t, z, 0.0)); };
    for (double x : {0.5, -1.2})
      for (double y : {0.8, 2.0}) {
        double v = translate_1d(k, slice, -y, x, 64).real();
        double ref = heat_kernel_1d(k, t, x, y);
        CHECK(v == doctest::Approx(ref).epsilon(1e-9));
      }
  }
}

TEST_CASE("product translation peels off Dirac coordinates") {
  MultiplicityVector mult({0.7, 0.0});
  auto f = [](const Point& p) {
    return Complex(std::exp(-0.5 * (p[0] * p[0] + p[1] * p[1])));
  };
  auto f0 = [](double z) { return Complex(std::exp(-0.5 * z * z)); };
  Point x{0.6, 1.0}, y{1.4, -0.5};
  Complex v = translate(mult, f, y, x);
  Complex ref = translate_1d(0.7, f0, y[0], x[0], 48) * f0(x[1] + y[1]);
  CHECK(std::abs(v - ref) <= 1e-12);
}

TEST_CASE("convolution: classical case and commutativity") {
  // k = 0, Gaussian * Gaussian = sqrt(pi) e^{-x^2/4}
  {
    MultiplicityVector mult({0.0});
    auto f = [](const Point& p) { return Complex(std::exp(-0.5 * p[0] * p[0])); };
    MuGrid1D g1 = mu_grid_1d(0.0, -10.0, 10.0, 8, 16);
    GridFunction g = sample_1d(g1, [](double z) {
      return Complex(std::exp(-0.5 * z * z));
    });
    MuGrid1D outg = mu_grid_1d(0.0, -2.0, 2.0, 1, 5);
    GridFunction out = convolve(mult, f, g, mu_grid_nd(mult, {outg}));
    for (std::size_t i = 0; i < out.size(); ++i) {
      double x = out.nodes[i][0];
      double ref = std::sqrt(kPi) * std::exp(-0.25 * x * x);
      CHECK(std::abs(out.values[i] - ref) <= 1e-8);
    }
  }
  // k = 0.7: f * g = g * f on sample points
  {
    MultiplicityVector mult({0.7});
    auto fa = [](const Point& p) { return Complex(std::exp(-p[0] * p[0])); };
    auto fb = [](const Point& p) {
      return Complex(p[0] * p[0] * std::exp(-0.5 * p[0] * p[0]));
    };
    MuGrid1D gg = mu_grid_1d(0.7, -7.0, 7.0, 6, 12);
    GridFunction ga = sample_1d(gg, [&](double z) { return fa({z}); });
    GridFunction gb = sample_1d(gg, [&](double z) { return fb({z}); });
    MuGrid1D outg = mu_grid_1d(0.7, -1.5, 1.5, 1, 3);
    GridFunction skel = mu_grid_nd(mult, {outg});
    GridFunction ab = convolve(mult, fa, gb, skel, 32);
    GridFunction ba = convolve(mult, fb, ga, skel, 32);
    for (std::size_t i = 0; i < ab.size(); ++i)
      CHECK(std::abs(ab.values[i] - ba.values[i]) <= 1e-6);
  }
}

TEST_CASE("orbit tail ratio: support structure and boundedness") {
  auto f = [](double z) {
    double u = 1.0 - z * z;
    return Complex(u > 0.0 ? std::exp(-1.0 / u) : 0.0);
  };
  for (double k : {0.3, 0.7, 1.5}) {
    // tail is empty once r exceeds the support radius
    CHECK(orbit_tail_ratio(k, f, 1.0, 2.0, 1.5, 1.0) == 0.0);
    for (double y : {0.5, 2.0, 5.0})
      for (double r : {0.125, 0.25, 0.5}) {
        double v = orbit_tail_ratio(k, f, 1.0, y, r, 1.0);
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
      }
  }
  CHECK_THROWS_AS(orbit_tail_ratio(0.7, f, 1.0, 1.0, -0.1, 1.0),
                  std::invalid_argument);
}
