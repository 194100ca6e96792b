#include "hecketrace/trace.hpp"

#include <stdexcept>

#include "hecketrace/hurwitz.hpp"
#include "hecketrace/quadint.hpp"

namespace hecketrace {

BigInt a_seq(unsigned long n) {
  if (n == 0) return 1;
  BigInt prev = 1, cur = -1;
  for (unsigned long i = 2; i <= n; ++i) {
    BigInt next = -3 * cur - 4 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigInt> a_seq_range(unsigned long nmax) {
  std::vector<BigInt> v;
  v.reserve(nmax + 1);
  v.emplace_back(1);
  if (nmax == 0) return v;
  v.emplace_back(-1);
  for (unsigned long n = 2; n <= nmax; ++n) {
    v.push_back(-3 * v[n - 1] - 4 * v[n - 2]);
  }
  return v;
}

BigInt a_seq_closed(unsigned long n) {
  const QuadInt w = QuadInt::omega();
  const QuadInt diff = w - w.conj();  // -1 + 2w
  QuadInt num = quad_pow(w, 2 * n + 1) - quad_pow(w.conj(), 2 * n + 1);
  QuadInt q = quad_div_exact(num, diff);
  if (q.v != 0) throw std::domain_error("a_seq_closed: quotient not rational");
  return q.u;
}

BigInt p_coeff(unsigned long m, const BigInt& t, const BigInt& n) {
  if (m == 0) return 1;
  BigInt prev = 1, cur = t;
  for (unsigned long i = 2; i <= m; ++i) {
    BigInt next = t * cur - n * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt p_closed(unsigned long k, const BigInt& t, const BigInt& n) {
  if (k < 2) throw std::invalid_argument("p_closed: k must be >= 2");
  // sum_{j=0}^{k-1} (-1)^j C(2k-2-j, j) n^j t^{2k-2-2j}, binomial updated
  // incrementally: C(m-j-1, j+1) = C(m-j, j) (m-2j)(m-2j-1) / ((j+1)(m-j)).
  const unsigned long m = 2 * k - 2;
  BigInt sum = 0;
  BigInt binom = 1;  // C(m, 0)
  BigInt npow = 1;
  for (unsigned long j = 0; j + 1 <= k; ++j) {
    unsigned long texp = m - 2 * j;
    BigInt tp;
    if (texp == 0) {
      tp = 1;  // 0^0 = 1 keeps the t = 0 column of the sum correct
    } else {
      mpz_pow_ui(tp.get_mpz_t(), t.get_mpz_t(), texp);
    }
    BigInt term = binom * npow * tp;
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (j + 2 <= k) {
      binom *= (m - 2 * j) * (m - 2 * j - 1);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      (j + 1) * (m - j));
      npow *= n;
    }
  }
  return sum;
}

BigInt trace_es(unsigned long weight, unsigned long n) {
  if (weight % 2 != 0 || weight < 4) {
    throw std::invalid_argument(
        "trace_es: weight must be an even integer >= 4");
  }
  if (n == 0) throw std::invalid_argument("trace_es: n must be positive");
  const unsigned long m = weight - 2;
  BigRat total = 0;
  // Elliptic/parabolic part: t^2 <= 4n.
  long tmax = 0;
  while (static_cast<unsigned long>((tmax + 1)) * (tmax + 1) <= 4 * n) ++tmax;
  for (long t = -tmax; t <= tmax; ++t) {
    long disc = static_cast<long>(4 * n) - t * t;
    BigRat h = hurwitz(disc);
    if (h == 0) continue;
    BigInt p = p_coeff(m, BigInt(t), BigInt(n));
    total += BigRat(p) * h;
  }
  // Divisor part: ordered pairs d d' = n.
  BigInt dsum = 0;
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned long dp = n / d;
    BigInt mn(d < dp ? d : dp);
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), mn.get_mpz_t(), weight - 1);
    dsum += term;
  }
  total += BigRat(dsum);
  total *= make_rat(-1, 2);
  return to_integer(total);
}

BigInt trace_comb(unsigned long k) {
  if (k < 2) throw std::invalid_argument("trace_comb: k must be >= 2");
  const unsigned long m = 2 * k - 2;
  // (-2)^{k-2}
  BigRat total = make_rat(pow2(k - 2) * ((k - 2) % 2 == 0 ? 1 : -1), 1);
  total -= 1;
  BigInt binom = 1;
  for (unsigned long j = 0; j + 1 <= k; ++j) {
    // 2^j (1 + 2^{2k-3-2j}); the exponent is -1 at j = k-1
    BigRat factor;
    long e = static_cast<long>(2 * k) - 3 - 2 * static_cast<long>(j);
    if (e >= 0) {
      factor = BigRat(1 + pow2(static_cast<unsigned long>(e)));
    } else {
      factor = 1 + make_rat(1, 2);
    }
    BigRat term = BigRat(binom * pow2(j)) * factor;
    if (j % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
    if (j + 2 <= k) {
      binom *= (m - 2 * j) * (m - 2 * j - 1);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      (j + 1) * (m - j));
    }
  }
  return to_integer(total);
}

int trace_rec_epsilon(unsigned long k) {
  switch (k % 4) {
    case 0: return 1;
    case 1: return -1;
    default: return 0;
  }
}

BigInt trace_rec(unsigned long k) {
  if (k < 2) throw std::invalid_argument("trace_rec: k must be >= 2");
  BigInt t = -a_seq(k - 1) - 1;
  int eps = trace_rec_epsilon(k);
  if (eps == 1) t += pow2(k - 1);
  if (eps == -1) t -= pow2(k - 1);
  return t;
}

BigInt identity_parts_i(unsigned long n) {
  // sum_j (-1)^j C(2n-j, j) 2^j with the same incremental binomial update.
  BigInt sum = 0;
  BigInt binom = 1;
  BigInt twopow = 1;
  const unsigned long m = 2 * n;
  for (unsigned long j = 0; j <= n; ++j) {
    BigInt term = binom * twopow;
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (j + 1 <= n) {
      binom *= (m - 2 * j) * (m - 2 * j - 1);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      (j + 1) * (m - j));
      twopow <<= 1;
    }
  }
  return sum;
}

BigInt identity_parts_ii(unsigned long n) {
  BigInt sum = 0;
  BigInt binom = 1;
  BigInt twopow = pow2(n);
  const unsigned long m = 2 * n;
  for (unsigned long j = 0; j <= n; ++j) {
    BigInt term = binom * twopow;
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (j + 1 <= n) {
      binom *= (m - 2 * j) * (m - 2 * j - 1);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      (j + 1) * (m - j));
      twopow >>= 1;
    }
  }
  return sum;
}

long dim_cusp_forms(unsigned long weight) {
  if (weight % 2 != 0 || weight < 4) {
    throw std::invalid_argument("dim_cusp_forms: weight must be even, >= 4");
  }
  long d = static_cast<long>(weight / 12);
  if (weight % 12 == 2) d -= 1;
  return d;
}

}  // namespace hecketrace
