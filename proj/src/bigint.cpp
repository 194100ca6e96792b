#include "hecketrace/bigint.hpp"

#include <stdexcept>

namespace hecketrace {

long v2(const BigInt& x) {
  if (x == 0) return kV2Infinity;
  // mpz_scan1 sees negatives as two's complement; trailing zeros match |x|.
  return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigInt binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  unsigned long kk = static_cast<unsigned long>(k);
  if (kk > n - kk) kk = n - kk;
  BigInt r = 1;
  for (unsigned long i = 1; i <= kk; ++i) {
    r *= static_cast<unsigned long>(n - kk + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

bool is_integral(const BigRat& q) { return q.get_den() == 1; }

BigInt to_integer(const BigRat& q) {
  if (!is_integral(q)) {
    throw std::logic_error("to_integer: rational " + q.get_str() +
                           " is not an integer");
  }
  return q.get_num();
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt from_decimal(const std::string& s) {
  BigInt r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("from_decimal: bad integer literal '" + s + "'");
  }
  return r;
}

}  // namespace hecketrace
