#pragma once

#include "dunkl/heat.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/types.hpp"

namespace dunkl {

/// Mean-zero normalized atom supported in a ball: sup |a| <= 1/mu(B),
/// integral of a dmu = 0. Sampled on a quadrature grid covering the ball.
struct Atom {
  Ball ball;
  GridFunction values;
};

enum class AtomProfile { two_bump, derivative_of_bump };

/// Smooth atom with the three defining properties enforced numerically
/// (mean zero by exact coefficient balancing against dmu). Product case:
/// the sign change lives in the first coordinate.
Atom make_atom(const MultiplicityVector& mult, const Point& center, double radius,
               AtomProfile profile, int panels = 5, int order = 16);

/// Checks support, the sup bound and the mean-zero condition.
bool validate_atom(const MultiplicityVector& mult, const Atom& atom,
                   double mean_tol = 1e-10);

/// Outer integration grid for the maximal function of a function living
/// on the given ball: fine inside the ball, graded outside up to R.
std::vector<MuGrid1D> h1_outer_axes(const MultiplicityVector& mult, const Ball& ball,
                                    double R, int coarse_panels = 10,
                                    int fine_panels = 6, int order = 12);

/// H^1 norm estimate: outer quadrature of sup_t |e^{tL} f|.
double h1_maximal_norm(const MultiplicityVector& mult, const GridFunction& f,
                       const std::vector<double>& ts, const GridFunction& outer);

/// Uchiyama kernel K_r(x,y) = H_t(x,y) with t resolved from
/// mu(B(x, sqrt t)) = r.
double uchiyama_kernel(const MultiplicityVector& mult, const CutoffSpec& spec, double r,
                       const Point& x, const Point& y);

/// The three kernel hypotheses with delta = 1/N, tested over the grid of
/// (x, y, r) and Lipschitz perturbations of y honoring the proviso
/// d(y,y') <= (r + d(x,y))/4 in the quasi-distance. Returns reports
/// {diag_lower, upper_decay, lipschitz}.
std::vector<EstimateReport> uchiyama_conditions_scan(const MultiplicityVector& mult,
                                                     const CutoffSpec& spec,
                                                     const std::vector<Point>& xs,
                                                     const std::vector<Point>& ys,
                                                     const std::vector<double>& rs,
                                                     const std::string& grid_id);

/// sup over the atom family of || sup_t |e^{tL} T_m a| ||_{L1(dmu)},
/// divided by the Hormander constant M (pass 1 to report the raw sup).
/// Dimension 1; the frequency grid is scale-adapted to each atom.
EstimateReport multiplier_atom_bound(double k, const MultiplierSpec& mspec,
                                     const std::vector<Atom>& atoms,
                                     const std::vector<double>& ts,
                                     double hormander_const,
                                     const std::string& grid_id);

}  // namespace dunkl
