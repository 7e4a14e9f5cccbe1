#pragma once

#include "dunkl/grid.hpp"
#include "dunkl/types.hpp"

namespace dunkl {

/// Density of the translation measure nu_{x,y} against Lebesgue measure
/// together with the |z|^{2k} factor is nu_density(k,x,y,z) * |z|^{2k}.
/// Requires k > 0 and x, y nonzero (otherwise the measure is a Dirac).
/// Vanishes for |z| outside [ ||x|-|y|| , |x|+|y| ]; the density is signed.
double nu_density(double k, double x, double y, double z);

/// Generalized translation (tau_y f)(x) in dimension 1, by Gauss-Jacobi
/// quadrature with the endpoint weight ((d-s)(s-c))^{k-1} built in
/// (s = |z|, c = ||x|-|y||, d = |x|+|y|). Handles the Dirac cases
/// x = 0, y = 0 and the classical case k = 0 exactly.
Complex translate_1d(double k, const std::function<Complex(double)>& f, double y,
                     double x, int order = 48);

/// Product-case translation: tensor quadrature, one (possibly Dirac)
/// factor per coordinate.
Complex translate(const MultiplicityVector& mult,
                  const std::function<Complex(const Point&)>& f, const Point& y,
                  const Point& x, int order = 48);

/// Convolution f * g(x) = integral of (tau_{-y} f)(x) g(y) dmu(y), with g
/// sampled on a quadrature grid; evaluated on the nodes of out_skeleton.
GridFunction convolve(const MultiplicityVector& mult,
                      const std::function<Complex(const Point&)>& f,
                      const GridFunction& g, const GridFunction& out_skeleton,
                      int order = 48);

/// Total mass nu_{x,y}(R) (equal to 1: translation preserves integrals).
double nu_total_mass_1d(double k, double x, double y, int order = 64);

/// Total variation |nu_{x,y}|(R) (bounded uniformly in x, y).
double total_variation_1d(double k, double x, double y, int order = 64);

/// Tail-mass ratio: r^delta * integral of |tau_{-y} f| dmu over the
/// complement of the reflection orbit O(y,r) = { ||x|-|y|| <= r },
/// divided by || (1+|x|)^delta f ||_{L1(dmu)}. Bounded uniformly in y, r.
/// f must vanish outside [-f_support_radius, f_support_radius].
double orbit_tail_ratio(double k, const std::function<Complex(double)>& f,
                        double f_support_radius, double y, double r, double delta,
                        int order = 32);

}  // namespace dunkl
