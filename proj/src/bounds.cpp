#include "hecketrace/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hecketrace {

namespace {

double poly_eval_abs(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return std::abs(acc);
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const MinimalPolynomial& p) {
  if (p.coeffs.size() < 2) {
    throw std::invalid_argument("complex_roots: degree must be >= 1");
  }
  if (p.coeffs.back() <= 0) {
    throw std::invalid_argument("complex_roots: leading coefficient must be > 0");
  }
  std::vector<double> c;
  double scale = 0.0;
  c.reserve(p.coeffs.size());
  for (const auto& a : p.coeffs) {
    c.push_back(a.get_d());
    scale = std::max(scale, std::abs(c.back()));
  }
  const size_t m = c.size() - 1;
  // Durand-Kerner from a non-real seed spiral.
  std::vector<std::complex<double>> r(m);
  std::complex<double> seed(0.4, 0.9);
  r[0] = seed;
  for (size_t i = 1; i < m; ++i) r[i] = r[i - 1] * seed;
  const double lead = c.back();
  for (int iter = 0; iter < 500; ++iter) {
    double moved = 0.0;
    for (size_t i = 0; i < m; ++i) {
      std::complex<double> num = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) num = num * r[i] + *it;
      std::complex<double> den = lead;
      for (size_t j = 0; j < m; ++j) {
        if (j != i) den *= (r[i] - r[j]);
      }
      std::complex<double> delta = num / den;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  for (const auto& root : r) {
    if (poly_eval_abs(c, root) >= 1e-8 * scale) {
      throw std::runtime_error("complex_roots: iteration did not converge");
    }
  }
  return r;
}

double height(const MinimalPolynomial& p) {
  auto roots = complex_roots(p);
  double s = std::log(std::abs(p.coeffs.back().get_d()));
  for (const auto& r : roots) s += std::max(0.0, std::log(std::abs(r)));
  return s / static_cast<double>(roots.size());
}

LmnAlphaConstants lmn_alpha_constants() {
  const double s7 = std::sqrt(7.0);
  std::complex<double> alpha(-0.75, -s7 / 4.0);
  LmnAlphaConstants k;
  k.abs_alpha = std::abs(alpha);
  k.abs_log_alpha = std::abs(std::log(alpha));
  k.height_alpha = height(MinimalPolynomial{{2, 3, 2}});
  k.a = std::max(20.0, 10.98 * k.abs_log_alpha + 1.0 * k.height_alpha);
  return k;
}

LmnBound lmn_lower_bound_variant(long n) {
  if (n < 1) throw std::invalid_argument("lmn_lower_bound_variant: n must be >= 1");
  LmnBound b;
  b.a = lmn_alpha_constants().a;
  b.H = std::max(17.0, std::log(static_cast<double>(n) / 25.0) + 7.45);
  b.bound_exponent = -9.0 * b.a * b.H * b.H;
  return b;
}

LmnBound lmn_two_log_bound(long b1, long b2) {
  if (b1 < 1 || b2 < 1) {
    throw std::invalid_argument("lmn_two_log_bound: b1, b2 must be >= 1");
  }
  LmnBound b;
  b.a = lmn_alpha_constants().a;
  double arg = static_cast<double>(b1) / (2.0 * b.a) +
               static_cast<double>(b2) / 68.9;
  b.H = std::max({17.0, std::sqrt(1.0) / 10.0, std::log(arg) + 2.35 + 5.03});
  b.bound_exponent = -8.87 * b.a * b.H * b.H;
  return b;
}

double lmn_h1_eps_variant(double k0, double m) {
  return std::max(17.0, std::log(k0 / 53.81 + m / 68.9) + 7.38);
}

double threshold_a_gap(double n) {
  double ln = std::log(n);
  return (n / 2.0) * std::numbers::ln2 - 512.0 * ln * ln - ln / 2.0 -
         std::log(4.0);
}

double threshold_eps_gap(double m) {
  double lm = std::log(m);
  return m * std::numbers::ln2 + 0.5 * std::log(8.0 / 7.0) -
         512.0 * (lm + 4.385) * (lm + 4.385) - std::log(24.0 * m);
}

namespace {

// d/dn of c1 n - c2 (log n + c3)^2 - (small log terms) is positive once
// n >> c2 log n / n; certified by evaluating the derivative at N and 2N.
ThresholdResult certified_threshold(double (*gap)(double),
                                    double (*gap_derivative)(double),
                                    long asserted_upper,
                                    const std::string& id) {
  long hi = 4;
  while (gap(static_cast<double>(hi)) <= 0.0) {
    hi *= 2;
    if (hi > (1L << 40)) {
      throw std::runtime_error("threshold: no crossing found");
    }
  }
  long lo = hi / 2;
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (gap(static_cast<double>(mid)) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  ThresholdResult r;
  r.crossing = hi;
  r.verified_upper = asserted_upper;
  r.inequality_id = id;
  if (r.crossing > asserted_upper) {
    throw std::runtime_error("threshold " + id + ": crossing " +
                             std::to_string(r.crossing) + " exceeds " +
                             std::to_string(asserted_upper));
  }
  if (gap_derivative(static_cast<double>(hi)) <= 0.0 ||
      gap_derivative(static_cast<double>(2 * hi)) <= 0.0) {
    throw std::runtime_error("threshold " + id + ": gap not increasing");
  }
  // Sample beyond the certified range.
  for (int i = 1; i <= 10; ++i) {
    double n = static_cast<double>(asserted_upper) * (1.0 + 0.5 * i);
    if (gap(n) <= 0.0) {
      throw std::runtime_error("threshold " + id + ": positive gap lost at n=" +
                               std::to_string(n));
    }
  }
  return r;
}

double a_gap_derivative(double n) {
  return std::numbers::ln2 / 2.0 - 1024.0 * std::log(n) / n - 0.5 / n;
}

double eps_gap_derivative(double m) {
  return std::numbers::ln2 - 1024.0 * (std::log(m) + 4.385) / m - 1.0 / m;
}

}  // namespace

ThresholdResult threshold_a_case() {
  return certified_threshold(threshold_a_gap, a_gap_derivative, 352000,
                             "a_case");
}

ThresholdResult threshold_eps_case() {
  return certified_threshold(threshold_eps_gap, eps_gap_derivative, 302000,
                             "eps_case");
}

ThetaConstants theta_constants() {
  ThetaConstants t;
  t.sin_theta = std::sqrt(7.0 / 8.0);
  t.theta = std::asin(t.sin_theta);
  t.theta_over_half_pi = t.theta / (std::numbers::pi / 2.0);
  t.sqrt_8_over_7 = std::sqrt(8.0 / 7.0);
  t.e_2i_theta = std::exp(std::complex<double>(0.0, 2.0 * t.theta));
  return t;
}

}  // namespace hecketrace
