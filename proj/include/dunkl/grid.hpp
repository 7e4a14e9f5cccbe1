#pragma once

#include "dunkl/types.hpp"

namespace dunkl {

/// Quadrature nodes/weights for integrals against d(mu) = |x|^{2k} dx.
/// Panels touching 0 use a Gauss-Jacobi rule with the |x|^{2k} endpoint
/// weight built in, so the measure singularity is integrated exactly.
struct MuGrid1D {
  std::vector<double> nodes;
  std::vector<double> weights;  // include the |x|^{2k} density
  std::size_t size() const { return nodes.size(); }
};

/// Composite rule on [lo,hi] (split at 0 when inside).
MuGrid1D mu_grid_1d(double k, double lo, double hi, int panels_per_side, int order);

/// As above, but with extra fine panels on [fine_lo, fine_hi] (used to
/// resolve sharp kernels near a localized support).
MuGrid1D mu_grid_1d_refined(double k, double lo, double hi, double fine_lo,
                            double fine_hi, int coarse_panels, int fine_panels,
                            int order);

/// Tensor grid for the product measure; nodes enumerated row-major in the
/// order of the per-axis grids (deterministic).
GridFunction mu_grid_nd(const MultiplicityVector& mult,
                        const std::vector<MuGrid1D>& axes);

/// Sample a function onto a 1D mu-grid.
GridFunction sample_1d(const MuGrid1D& grid, const std::function<Complex(double)>& f);

GridFunction sample_nd(const GridFunction& skeleton,
                       const std::function<Complex(const Point&)>& f);

}  // namespace dunkl
