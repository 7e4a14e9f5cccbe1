#pragma once

#include <limits>

#include "dunkl/grid.hpp"
#include "dunkl/types.hpp"

namespace dunkl {

/// C^infty bump built from sigma(s) = phi(s) / (phi(s) + phi(1-s)),
/// phi(s) = e^{-1/s} for s > 0. Equal to 0 outside (s0, s1), equal to 1 on
/// [p0, p1], monotone in between, with an explicit derivative.
struct SmoothBump {
  double s0, p0, p1, s1;

  double operator()(double s) const;
  double deriv(double s) const;
};

/// Cutoff chi_t(x,y) = chi1((x+y)/x) * chi2(t/x^2), zero when x = 0.
/// chi1 lives on (-2, 2/3) with plateau [-1, 1/2]; chi2 on (-1, 1) with
/// plateau [0, 1/2]. The cutoff selects the region where x, y have
/// opposite signs of comparable size and t is small against x^2.
struct CutoffSpec {
  SmoothBump chi1{-2.0, -1.0, 0.5, 2.0 / 3.0};
  SmoothBump chi2{-1.0, 0.0, 0.5, 1.0};

  double chi(double t, double x, double y) const;
  double chi_grad_y(double t, double x, double y) const;
};

/// Sign/magnitude pair for quantities whose magnitude over/underflows.
struct SignedLog {
  double sign = 0.0;
  double log_abs = -std::numeric_limits<double>::infinity();

  double value() const { return sign == 0.0 ? 0.0 : sign * std::exp(log_abs); }
};

SignedLog signed_log_sub(const SignedLog& a, const SignedLog& b);  // a - b

/// log c_k with c_k = 2^{2k+1} Gamma(k + 1/2); h_t(x,x)|_{x=0} = c_k^{-1} t^{-k-1/2}.
double log_heat_norm_const(double k);

/// Heat kernel h_t(x,y), dimension 1. Always finite and positive.
double heat_kernel_1d(double k, double t, double x, double y);
double log_heat_kernel_1d(double k, double t, double x, double y);

/// d/dy h_t(x,y), analytic (two Kummer terms), evaluated in log space.
SignedLog heat_grad_signedlog(double k, double t, double x, double y);
double heat_kernel_grad_y(double k, double t, double x, double y);

/// Product heat kernel.
double heat_kernel_nd(const MultiplicityVector& mult, double t, const Point& x,
                      const Point& y);
double log_heat_kernel_nd(const MultiplicityVector& mult, double t, const Point& x,
                          const Point& y);

/// Truncated kernel H_t = (1 - chi_t) h_t and the cut-off part Q_t = chi_t h_t
/// (dimension 1). log variants return -inf where the kernel vanishes.
double truncated_kernel_1d(double k, const CutoffSpec& spec, double t, double x, double y);
double log_truncated_kernel_1d(double k, const CutoffSpec& spec, double t, double x,
                               double y);
double error_kernel_1d(double k, const CutoffSpec& spec, double t, double x, double y);

/// d/dy H_t = (1 - chi_t) d/dy h_t - (d/dy chi_t) h_t.
SignedLog truncated_grad_signedlog(double k, const CutoffSpec& spec, double t, double x,
                                   double y);

/// Product truncated kernel: the product of the 1D truncated factors.
/// The product error kernel is h_t - H_t (every term with a cut-off factor).
double log_truncated_kernel_nd(const MultiplicityVector& mult, const CutoffSpec& spec,
                               double t, const Point& x, const Point& y);
double error_kernel_nd(const MultiplicityVector& mult, const CutoffSpec& spec, double t,
                       const Point& x, const Point& y);

/// Heat semigroup applied to a sampled function: integral of h_t(x,.) f dmu.
Complex heat_apply(const MultiplicityVector& mult, const GridFunction& f, double t,
                   const Point& x);

/// sup over the time grid of |heat_apply|.
double maximal_heat(const MultiplicityVector& mult, const GridFunction& f,
                    const std::vector<double>& ts, const Point& x);

/// Two-sided comparison of h_t against its three-regime comparator
/// (small |xy|, large xy > 0, large xy < 0), plus the on-diagonal and
/// antidiagonal comparisons against ball volumes. Requires k > 0
/// (k = 0 is an exact Gaussian). Returns reports
/// {global_upper, global_lower, diag_upper, diag_lower, antidiag_upper,
/// antidiag_lower}.
std::vector<EstimateReport> global_behavior_scan(double k, const std::vector<double>& xs,
                                                 const std::vector<double>& ys,
                                                 const std::vector<double>& ts,
                                                 const std::string& grid_id);

/// Gaussian-type bounds for the truncated kernel with decay constant c:
/// on-diagonal two-sided comparison, off-diagonal upper bound with
/// e^{-d^2/(ct)} decay, the same for sqrt(t) grad_y H, and two Lipschitz
/// bounds in y (plain and Gaussian-weighted, the latter restricted to
/// |y - y'| <= d(x,y)/2). Works in any dimension via product kernels.
std::vector<EstimateReport> truncated_gaussian_scan(const MultiplicityVector& mult,
                                                    const CutoffSpec& spec, double c,
                                                    const std::vector<Point>& xs,
                                                    const std::vector<Point>& ys,
                                                    const std::vector<double>& ts,
                                                    const std::string& grid_id);

/// L1(dmu) norm in x of sup_t of the error kernel at fixed y.
double q_star_l1_scan(const MultiplicityVector& mult, const CutoffSpec& spec,
                      const Point& y, const GridFunction& xgrid,
                      const std::vector<double>& ts);

/// sqrt(t) * L1(dmu) norm in x of |d/dy h_t(x,y)| (bounded uniformly in t, y).
double grad_l1_scan(double k, double t, double y, int panels = 12, int order = 24);

}  // namespace dunkl
