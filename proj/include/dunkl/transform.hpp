#pragma once

#include "dunkl/grid.hpp"
#include "dunkl/types.hpp"

namespace dunkl {

/// Normalization constant of the transform in dimension 1:
/// integral of e^{-x^2/2} dmu = 2^{k+1/2} Gamma(k+1/2). With this constant
/// the transform is an L^2(dmu) isometry and reduces to the classical
/// (2 pi)^{-1/2}-normalized Fourier transform at k = 0.
double log_transform_const(double k);

/// Forward transform of a sampled 1D function at one frequency:
/// F f(xi) = c^{-1} integral of f(x) E(x,-i xi) dmu(x).
Complex dunkl_transform_point(double k, const GridFunction& f, double xi);

/// Forward transform sampled on a frequency grid.
GridFunction dunkl_transform(double k, const GridFunction& f, const MuGrid1D& xi_grid);

/// Inverse transform (kernel E(x, i xi) = conj E(x, -i xi)).
Complex dunkl_inverse_point(double k, const GridFunction& fhat, double x);
GridFunction dunkl_inverse(double k, const GridFunction& fhat, const MuGrid1D& x_grid);

/// | ||F f||_2 - ||f||_2 | / ||f||_2, transform computed on xi_grid.
double plancherel_defect(double k, const GridFunction& f, const MuGrid1D& xi_grid);

struct MultiplierSpec {
  std::string name;
  std::function<Complex(double)> m;
};

/// T_m f = F^{-1}( m . F f ), resampled on the nodes of f.
GridFunction multiplier_apply(double k, const MultiplierSpec& spec,
                              const GridFunction& f, const MuGrid1D& xi_grid);

/// L^2 Sobolev norm of a compactly supported function via DFT on the
/// periodized box [-half_width, half_width].
double sobolev_norm_periodized(const std::function<Complex(double)>& g, double order,
                               double half_width, std::size_t samples);

/// sup over the scale grid of || chi(|.|) m(t .) ||_{W_2^order}, where chi is
/// the fixed radial window equal to 1 on [1/2,2] and supported in (1/4,4).
double hormander_M(const MultiplierSpec& spec, double order,
                   const std::vector<double>& ts, double half_width = 5.0,
                   std::size_t samples = 1024);

}  // namespace dunkl
