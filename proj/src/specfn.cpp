#include "dunkl/specfn.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

namespace dunkl {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxTaylorTerms = 400;

// Taylor series for z >= 0, all terms positive. Returns log of the sum.
double log_taylor_positive(double a, double b, double z) {
  // term ratio: t_{n+1}/t_n = (a+n) z / ((b+n)(n+1))
  double sum = 1.0, term = 1.0;
  double rescale_log = 0.0;
  for (int n = 0; n < kMaxTaylorTerms; ++n) {
    term *= (a + n) * z / ((b + n) * (n + 1));
    sum += term;
    if (term < sum * 1e-18) return rescale_log + std::log(sum);
    if (sum > 1e290) {  // only reachable far beyond the switchover
      rescale_log += std::log(sum);
      term /= sum;
      sum = 1.0;
    }
  }
  throw SeriesError(z, "taylor");
}

// Asymptotic sum truncated at the smallest term. Terms t_{l+1}/t_l = p_l q_l / ((l+1) w).
double asymptotic_sum(double p0, double q0, double w, double z, const char* name) {
  double sum = 1.0, term = 1.0;
  double prev_abs = std::numeric_limits<double>::infinity();
  for (int l = 0; l < 200; ++l) {
    double next = term * (p0 + l) * (q0 + l) / ((l + 1) * w);
    if (std::abs(next) < 1e-17 * std::abs(sum)) {
      sum += next;
      return sum;
    }
    if (std::abs(next) >= prev_abs) {
      // smallest term reached; require it to be below a loose floor
      if (prev_abs > 1e-8 * std::abs(sum)) throw SeriesError(z, name);
      return sum;
    }
    term = next;
    prev_abs = std::abs(term);
    sum += term;
  }
  return sum;
}

}  // namespace

double log_hyp1f1_taylor(double a, double b, double z) {
  if (!(a > 0.0 && b > a)) throw std::invalid_argument("log_hyp1f1 requires 0 < a < b");
  if (z == 0.0) return 0.0;
  if (z > 0.0) return log_taylor_positive(a, b, z);
  // Kummer transform keeps all series terms positive for negative argument
  return z + log_taylor_positive(b - a, b, -z);
}

double log_hyp1f1_asymptotic(double a, double b, double z) {
  if (!(a > 0.0 && b > a)) throw std::invalid_argument("log_hyp1f1 requires 0 < a < b");
  if (z > 0.0) {
    // 1F1 ~ Gamma(b)/Gamma(a) e^z z^{a-b} sum_l (1-a)_l (b-a)_l / (l! z^l)
    double s = asymptotic_sum(1.0 - a, b - a, z, z, "asymptotic+");
    return std::lgamma(b) - std::lgamma(a) + z + (a - b) * std::log(z) + std::log(s);
  }
  // 1F1 ~ Gamma(b)/Gamma(b-a) |z|^{-a} sum_l (a)_l (a-b+1)_l / (l! |z|^l)
  double az = -z;
  double s = asymptotic_sum(a, a - b + 1.0, az, z, "asymptotic-");
  return std::lgamma(b) - std::lgamma(b - a) - a * std::log(az) + std::log(s);
}

double log_hyp1f1(double a, double b, double z) {
  if (z == 0.0) {
    if (!(a > 0.0 && b > a)) throw std::invalid_argument("log_hyp1f1 requires 0 < a < b");
    return 0.0;
  }
  if (std::abs(z) <= kHyp1f1Switch) return log_hyp1f1_taylor(a, b, z);
  return log_hyp1f1_asymptotic(a, b, z);
}

double hyp1f1(double a, double b, double z) { return std::exp(log_hyp1f1(a, b, z)); }
double hyp1f1(const KummerParams& p) { return hyp1f1(p.a, p.b, p.z); }

double hyp1f1_deriv(double a, double b, double z) {
  return (a / b) * hyp1f1(a + 1.0, b + 1.0, z);
}
double hyp1f1_deriv(const KummerParams& p) { return hyp1f1_deriv(p.a, p.b, p.z); }

double log_dunkl_kernel_1d(double k, double x, double y) {
  double xy = x * y;
  if (k == 0.0) return xy;
  if (xy == 0.0) return 0.0;
  return xy + log_hyp1f1(k, 2.0 * k + 1.0, -2.0 * xy);
}

double dunkl_kernel_1d(double k, double x, double y) {
  return std::exp(log_dunkl_kernel_1d(k, x, y));
}

double dunkl_kernel_nd(const MultiplicityVector& mult, const Point& x, const Point& y) {
  if (x.size() != mult.dim() || y.size() != mult.dim())
    throw std::invalid_argument("dunkl_kernel_nd: dimension mismatch");
  double log_e = 0.0;
  for (std::size_t j = 0; j < mult.dim(); ++j)
    log_e += log_dunkl_kernel_1d(mult[j], x[j], y[j]);
  return std::exp(log_e);
}

double asymptotic_envelope(double k, double xy) {
  if (!(k > 0.0)) throw std::invalid_argument("asymptotic_envelope requires k > 0");
  if (std::abs(xy) < 1.0) return 1.0;
  double c = std::lgamma(k + 0.5) - 0.5 * std::log(kPi);
  if (xy >= 1.0) return std::exp(k * std::log(2.0) + c + xy - k * std::log(xy));
  return std::exp((k - 1.0) * std::log(2.0) + std::log(k) + c - xy -
                  (k + 1.0) * std::log(-xy));
}

GaussJacobiRule::GaussJacobiRule(std::size_t n, double alpha, double beta) {
  if (n == 0) throw std::invalid_argument("GaussJacobiRule: n must be positive");
  if (!(alpha > -1.0 && beta > -1.0))
    throw std::invalid_argument("GaussJacobiRule: exponents must be > -1");
  // Three-term recurrence coefficients of the monic Jacobi polynomials.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  double ab = alpha + beta;
  for (std::size_t i = 0; i < n; ++i) {
    double ii = static_cast<double>(i);
    double denom = (2.0 * ii + ab) * (2.0 * ii + ab + 2.0);
    double ai = (denom == 0.0) ? 0.0 : (beta * beta - alpha * alpha) / denom;
    if (i == 0 && ab + 2.0 == 0.0) ai = (beta - alpha) / 2.0;  // degenerate a+b = -2
    J(i, i) = ai;
    if (i + 1 < n) {
      double i1 = ii + 1.0;
      double num = 4.0 * i1 * (i1 + alpha) * (i1 + beta) * (i1 + ab);
      double den = sq(2.0 * i1 + ab) * (2.0 * i1 + ab + 1.0) * (2.0 * i1 + ab - 1.0);
      if (i == 0) {
        num = 4.0 * (1.0 + alpha) * (1.0 + beta);
        den = sq(ab + 2.0) * (ab + 3.0);
      }
      double bi = std::sqrt(num / den);
      J(i, i + 1) = bi;
      J(i + 1, i) = bi;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
  double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                        std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  nodes.resize(n);
  weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = solver.eigenvalues()(i);
    weights[i] = mu0 * sq(solver.eigenvectors()(0, i));
  }
}

const GaussJacobiRule& jacobi_rule(std::size_t n, double alpha, double beta) {
  static std::mutex mtx;
  static std::map<std::tuple<std::size_t, double, double>, GaussJacobiRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(n, alpha, beta);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, GaussJacobiRule(n, alpha, beta)).first;
  return it->second;
}

Complex dunkl_kernel_complex_1d(double k, double x, double xi) {
  if (k < 0.0) throw std::invalid_argument("dunkl_kernel_complex_1d requires k >= 0");
  if (k == 0.0) return std::polar(1.0, -x * xi);
  if (x == 0.0 || xi == 0.0) return {1.0, 0.0};

  auto eval = [&](std::size_t n) {
    const GaussJacobiRule& rule = jacobi_rule(n, k - 1.0, k);
    double wsum = 0.0;
    Complex acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      wsum += rule.weights[i];
      acc += rule.weights[i] * std::polar(1.0, -x * xi * rule.nodes[i]);
    }
    return acc / wsum;  // normalization enforces E(x,0) = 1 exactly
  };

  // start from a size adequate for the oscillation x*xi*u on [-1,1]
  std::size_t n = 48;
  double osc = std::abs(x * xi);
  while (static_cast<double>(n) < 0.75 * osc + 24.0) n *= 2;
  Complex v = eval(n);
  for (int iter = 0; iter < 8; ++iter) {
    Complex v2 = eval(2 * n);
    if (std::abs(v2 - v) < 1e-12) return v2;
    v = v2;
    n *= 2;
  }
  return v;
}

}  // namespace dunkl
