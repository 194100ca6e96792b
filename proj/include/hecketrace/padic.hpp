#pragma once

#include <utility>

#include "hecketrace/bigint.hpp"

namespace hecketrace {

// A 2-adic number 2^v * u with u odd, carried as (valuation v, unit residue
// u mod 2^N, guaranteed unit bits N). The absolute precision v + N is the
// power of two below which the value is pinned down. Cancellation that wipes
// out every known bit produces a "zero to precision P" element: all that is
// known is v2 >= P. An exact zero has infinite precision.
//
// Every operation derives the output precision from the inputs and never
// claims more bits than it can guarantee.
class Padic2 {
 public:
  Padic2() : zero_(true), prec_(kV2Infinity) {}

  // x known exactly, recorded modulo 2^abs_prec.
  static Padic2 from_integer(const BigInt& x, long abs_prec);
  static Padic2 exact_zero();
  static Padic2 zero_to_precision(long abs_prec);
  // 2^val * unit with unit odd mod 2^rel_prec.
  static Padic2 from_unit(long val, const BigInt& unit, long rel_prec);

  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && prec_ == kV2Infinity; }

  // Valuation of a definite nonzero element; throws on a zero-flagged value
  // (for those only the lower bound abs_precision() is known).
  long valuation() const;
  const BigInt& unit() const;
  long rel_precision() const;
  // v + N; for zero-flagged values the known lower bound on the valuation.
  long abs_precision() const;

  // Canonical residue in [0, 2^bits); requires bits <= abs_precision and a
  // nonnegative valuation.
  BigInt residue(long bits) const;

  Padic2 operator+(const Padic2& o) const;
  Padic2 operator-(const Padic2& o) const;
  Padic2 operator-() const;
  Padic2 operator*(const Padic2& o) const;
  // Division by a definite nonzero element: multiplication by the inverse of
  // its odd part with explicit valuation bookkeeping.
  Padic2 operator/(const Padic2& o) const;
  Padic2 pow(unsigned long e) const;

  // True when both agree mod 2^bits; requires both pinned down that far.
  bool congruent(const Padic2& o, long bits) const;

 private:
  bool zero_;
  long val_ = 0;   // valuation (zero_: unused)
  BigInt unit_;    // odd residue mod 2^prec_ (zero_: unused)
  long prec_;      // zero_: abs precision; else rel precision of unit_
};

// Square root of u (u = 1 mod 8) on the branch s = branch_mod8 (mod 8),
// lifted bit by bit: given s^2 = u (mod 2^j), add 2^{j-1} iff (s^2-u)/2^j is
// odd. Result carries `precision` guaranteed bits. Throws
// std::invalid_argument if u != 1 (mod 8) or the branch does not square to
// u mod 16.
Padic2 sqrt2(const BigInt& u, int branch_mod8, long precision);

// (w, wbar) = ((1-s)/2, (1+s)/2) for s = sqrt(-7) on the branch s = 5
// (mod 8) -- the unique branch with v2(w) = 1. Asserts v2(w) = 1,
// v2(wbar) = 0 and that w - wbar is a unit.
std::pair<Padic2, Padic2> omega2(long precision);

// 2-adic logarithm sum_{n>=1} (-1)^{n+1} (x-1)^n / n for odd x, truncated at
// the first n with n*v2(x-1) - floor(log2 n) >= precision_target. Vanishes on
// roots of unity: log(-1) = 0. Throws std::domain_error unless v2(x-1) >= 1.
Padic2 log2adic(const Padic2& x, long precision_target);

// The valuation-control constant
//   Omega_t = ( log2((1+t)(2w-1)) / log2(1-w) + 1 ) / 2  in Z_2,
// for t a multiple of 8 (t = 0 gives Omega since log(-1) = 0). The ratio must
// come out odd so that the halving is exact; a parity failure is a hard
// error, never rounded.
Padic2 omega_const(long t, long precision);

struct ValuationPrediction {
  long k = 0;
  long t = 0;
  long predicted = 0;            // 3 + v2(k - Omega_t)
  bool equality_guaranteed = false;  // v2(k - Omega_t) < k - 4
};

// Predicted v2(TrT2(2k) - t): a lower bound always, an equality when
// flagged. Throws std::domain_error if k - Omega_t vanishes to working
// precision (the prediction then needs more bits).
ValuationPrediction predict_v2_shifted_trace(long k, long t, long precision);

// Whether equal traces at weights 2k, 2k2 are 2-adically admissible: the
// valuation signatures (v2(k-Omega), v2(k-Omega_8)), clipped at 2, must
// match; this reproduces the k = k2 (mod 4) filter.
bool congruence_filter(long k, long k2, long precision);

}  // namespace hecketrace
