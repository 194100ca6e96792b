#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hecketrace/bigint.hpp"

namespace hecketrace {

// Integer-coefficient polynomial a_m x^m + ... + a_0 with a_m > 0, stored
// low-degree first. Irreducibility is the caller's responsibility.
struct MinimalPolynomial {
  std::vector<BigInt> coeffs;

  unsigned long degree() const { return coeffs.size() - 1; }
};

// All complex roots by Durand-Kerner iteration, with a residual check
// |p(r)| < 1e-8 * (coefficient scale). Throws std::runtime_error if the
// iteration fails to converge.
std::vector<std::complex<double>> complex_roots(const MinimalPolynomial& p);

// Logarithmic (Weil) height h = (1/m)(log|a_m| + sum max(0, log|r_i|)).
double height(const MinimalPolynomial& p);

// Constants for alpha = w/wbar = -3/4 - i sqrt(7)/4 (degree 2, D = 1).
struct LmnAlphaConstants {
  double abs_alpha;      // 1 (alpha on the unit circle)
  double abs_log_alpha;  // |log alpha|, principal branch: about 2.418858
  double height_alpha;   // log(2)/2, from the minimal polynomial 2x^2+3x+2
  double a;              // max{20, 10.98 |log alpha| + D h(alpha)}
};
LmnAlphaConstants lmn_alpha_constants();

struct LmnBound {
  double half_degree_D = 1.0;
  double a = 0.0;
  double H = 0.0;               // the H (or H1) actually used
  double bound_exponent = 0.0;  // lower bound for log|...|, always negative
};

// log|alpha^n - 1| >= -9 a H1^2 with H1 = max{17, log(n/25) + 7.45}.
LmnBound lmn_lower_bound_variant(long n);

// Two-logarithm bound for Lambda = b1 i pi - b2 log alpha:
// log|Lambda| >= -8.87 a H^2, H = max{17, sqrt(D)/10,
// log(b1/(2a) + b2/68.9) + 2.35 D + 5.03}, at D = 1.
LmnBound lmn_two_log_bound(long b1, long b2);

// The specialization H1 = max{17, log(k0/53.81 + m/68.9) + 7.38} used for
// the a_n - eps 2^n comparison.
double lmn_h1_eps_variant(double k0, double m);

struct ThresholdResult {
  long crossing = 0;        // least N with the gap positive for all n >= N
  long verified_upper = 0;  // the coarser bound the argument needs
  std::string inequality_id;
};

// Least N beyond which (n/2)log 2 - 2^9 (log n)^2 > (log n)/2 + log 4, found
// by exponential bracketing and bisection; eventual monotonicity is certified
// by the derivative sign at N and 2N plus sampling. Asserts N <= 352000.
ThresholdResult threshold_a_case();

// Same for m log 2 + log sqrt(8/7) - 2^9 (log m + 4.385)^2 > log(24 m);
// asserts the threshold <= 302000.
ThresholdResult threshold_eps_case();

// Gap functions behind the threshold searches (positive means the range is
// excluded); exposed for report sampling.
double threshold_a_gap(double n);
double threshold_eps_gap(double m);

struct ThetaConstants {
  double theta;              // arcsin sqrt(7/8)
  double sin_theta;          // sqrt(7/8)
  double theta_over_half_pi; // about 0.76995
  double sqrt_8_over_7;      // 1/sin(theta)
  std::complex<double> e_2i_theta;  // -3/4 + i sqrt(7)/4
};
ThetaConstants theta_constants();

}  // namespace hecketrace
