#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

namespace hecketrace {

// Exact arbitrary-precision integers and rationals. Decimal strings are the
// canonical serialization for integers; rationals print as "num/den" in
// lowest terms with positive denominator.
using BigInt = mpz_class;
using BigRat = mpq_class;

// v2(0), by convention.
inline constexpr long kV2Infinity = std::numeric_limits<long>::max();

// Largest e with 2^e | x; kV2Infinity for x = 0.
long v2(const BigInt& x);

// 2^e as an exact integer.
BigInt pow2(unsigned long e);

// C(n, k); 0 when k < 0 or k > n. Multiplicative evaluation with exact
// stepwise division, no factorial tables.
BigInt binomial(unsigned long n, long k);

// num/den reduced to lowest terms, den normalized positive. Throws
// std::invalid_argument on den = 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

// True iff q has denominator 1.
bool is_integral(const BigRat& q);

// Exact numerator of an integral rational; throws std::logic_error otherwise.
BigInt to_integer(const BigRat& q);

std::string to_decimal(const BigInt& x);
BigInt from_decimal(const std::string& s);

}  // namespace hecketrace
