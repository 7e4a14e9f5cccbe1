#include "dunkl/transform.hpp"

#include <cmath>

#include "dunkl/heat.hpp"
#include "dunkl/specfn.hpp"

namespace dunkl {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex quad_against_kernel(double k, const GridFunction& f, double xi, bool conj) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Complex e = dunkl_kernel_complex_1d(k, f.nodes[i][0], xi);
    if (conj) e = std::conj(e);
    acc += f.weights[i] * f.values[i] * e;
  }
  return acc * std::exp(-log_transform_const(k));
}

}  // namespace

double log_transform_const(double k) {
  return (k + 0.5) * std::log(2.0) + std::lgamma(k + 0.5);
}

Complex dunkl_transform_point(double k, const GridFunction& f, double xi) {
  return quad_against_kernel(k, f, xi, false);
}

GridFunction dunkl_transform(double k, const GridFunction& f, const MuGrid1D& xi_grid) {
  return sample_1d(xi_grid, [&](double xi) { return dunkl_transform_point(k, f, xi); });
}

Complex dunkl_inverse_point(double k, const GridFunction& fhat, double x) {
  return quad_against_kernel(k, fhat, x, true);
}

GridFunction dunkl_inverse(double k, const GridFunction& fhat, const MuGrid1D& x_grid) {
  return sample_1d(x_grid, [&](double x) { return dunkl_inverse_point(k, fhat, x); });
}

double plancherel_defect(double k, const GridFunction& f, const MuGrid1D& xi_grid) {
  double nf = f.norm_l2();
  if (nf == 0.0) return 0.0;
  GridFunction fh = dunkl_transform(k, f, xi_grid);
  return std::abs(fh.norm_l2() - nf) / nf;
}

GridFunction multiplier_apply(double k, const MultiplierSpec& spec,
                              const GridFunction& f, const MuGrid1D& xi_grid) {
  GridFunction fh = dunkl_transform(k, f, xi_grid);
  for (std::size_t i = 0; i < fh.size(); ++i) fh.values[i] *= spec.m(fh.nodes[i][0]);
  GridFunction out = f;
  for (std::size_t i = 0; i < out.size(); ++i)
    out.values[i] = dunkl_inverse_point(k, fh, out.nodes[i][0]);
  return out;
}

double sobolev_norm_periodized(const std::function<Complex(double)>& g, double order,
                               double half_width, std::size_t samples) {
  const double B = half_width;
  const std::size_t M = samples;
  std::vector<Complex> vals(M);
  for (std::size_t m = 0; m < M; ++m)
    vals[m] = g(-B + 2.0 * B * static_cast<double>(m) / static_cast<double>(M));
  double dxi = 2.0 * B / static_cast<double>(M);
  double domega = kPi / B;
  double total = 0.0;
  // naive DFT; sizes stay modest (~1e3) so no FFT is needed
  for (std::size_t jj = 0; jj < M; ++jj) {
    double j = static_cast<double>(jj) - static_cast<double>(M) / 2.0;
    double omega = domega * j;
    Complex c = 0.0;
    for (std::size_t m = 0; m < M; ++m) {
      double xi = -B + dxi * static_cast<double>(m);
      c += vals[m] * std::polar(1.0, -omega * xi);
    }
    c *= dxi / std::sqrt(2.0 * kPi);
    total += std::pow(1.0 + omega * omega, order) * std::norm(c) * domega;
  }
  return std::sqrt(total);
}

double hormander_M(const MultiplierSpec& spec, double order,
                   const std::vector<double>& ts, double half_width,
                   std::size_t samples) {
  SmoothBump window{0.25, 0.5, 2.0, 4.0};
  double M = 0.0;
  for (double t : ts) {
    auto g = [&](double xi) -> Complex {
      double w = window(std::abs(xi));
      return w == 0.0 ? Complex(0.0) : w * spec.m(t * xi);
    };
    M = std::max(M, sobolev_norm_periodized(g, order, half_width, samples));
  }
  return M;
}

}  // namespace dunkl
