#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hecketrace/trace.hpp"

using namespace hecketrace;

namespace {

// Brute-force q-expansion of Delta = q prod (1-q^n)^24, far enough for tau(3).
std::vector<BigInt> tau_by_product(int terms) {
  std::vector<BigInt> c(terms + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= terms; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = terms - n; i >= 0; --i) {
        c[i + n] -= c[i];
      }
    }
  }
  // tau(k) is the coefficient of q^{k-1} in the product
  return c;
}

}  // namespace

TEST_CASE("a_seq first eleven terms") {
  const long expect[] = {1, -1, -1, 7, -17, 23, -1, -89, 271, -457, 287};
  for (int i = 0; i < 11; ++i) CHECK(a_seq(i) == expect[i]);
  auto range = a_seq_range(10);
  for (int i = 0; i < 11; ++i) CHECK(range[i] == expect[i]);
}

TEST_CASE("a_seq_closed matches the recurrence") {
  CHECK(a_seq_closed(0) == 1);
  CHECK(a_seq_closed(2) == -1);
  CHECK(a_seq_closed(7) == -89);
  auto range = a_seq_range(500);
  for (unsigned long n = 0; n <= 500; ++n) CHECK(a_seq_closed(n) == range[n]);
}

TEST_CASE("p_coeff examples and symmetry") {
  CHECK(p_coeff(2, 1, 2) == -1);
  CHECK(p_coeff(2, 2, 2) == 2);
  CHECK(p_coeff(0, 12345, -7) == 1);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dt(-50, 50), dn(-20, 20);
  std::uniform_int_distribution<unsigned long> dk(2, 50);
  for (int i = 0; i < 100; ++i) {
    unsigned long k = dk(rng);
    BigInt t(dt(rng)), n(dn(rng));
    CHECK(p_coeff(2 * k - 2, t, n) == p_coeff(2 * k - 2, -t, n));
  }
}

TEST_CASE("p_closed equals p_coeff") {
  CHECK(p_closed(2, 1, 2) == -1);
  CHECK(p_closed(2, 0, 2) == -2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dt(-50, 50), dn(-20, 20);
  std::uniform_int_distribution<unsigned long> dk(2, 60);
  for (int i = 0; i < 200; ++i) {
    unsigned long k = dk(rng);
    BigInt t(dt(rng)), n(dn(rng));
    CHECK(p_closed(k, t, n) == p_coeff(2 * k - 2, t, n));
    CHECK(p_closed(k, t, n) == p_closed(k, -t, n));
  }
}

TEST_CASE("trace_es reference values") {
  CHECK(trace_es(12, 2) == -24);
  CHECK(trace_es(20, 2) == 456);
  CHECK(trace_es(4, 2) == 0);
  CHECK_THROWS_AS(trace_es(11, 2), std::invalid_argument);
  CHECK_THROWS_AS(trace_es(2, 2), std::invalid_argument);
}

TEST_CASE("trace_es at n = 2, 3 against the Delta expansion") {
  auto c = tau_by_product(4);
  CHECK(c[1] == -24);   // tau(2)
  CHECK(c[2] == 252);   // tau(3)
  CHECK(trace_es(12, 2) == c[1]);
  CHECK(trace_es(12, 3) == c[2]);
}

TEST_CASE("trace_es at n = 1 equals dim S_2k") {
  for (unsigned long k = 2; k <= 500; ++k) {
    CHECK(trace_es(2 * k, 1) == dim_cusp_forms(2 * k));
  }
}

TEST_CASE("trace_comb reference values") {
  CHECK(trace_comb(6) == -24);
  CHECK(trace_comb(2) == 0);
  CHECK(trace_comb(10) == 456);
  CHECK_THROWS_AS(trace_comb(1), std::invalid_argument);
}

TEST_CASE("trace_rec reference values") {
  CHECK(trace_rec(6) == -24);
  CHECK(trace_rec(8) == 216);   // 89 - 1 + 128
  CHECK(trace_rec(9) == -528);  // -271 - 1 - 256
}

TEST_CASE("three trace routes agree to k = 300") {
  for (unsigned long k = 2; k <= 300; ++k) {
    BigInt rec = trace_rec(k);
    CHECK(trace_es(2 * k, 2) == rec);
    CHECK(trace_comb(k) == rec);
    CHECK(rec % 2 == 0);
  }
}

TEST_CASE("identity sums") {
  CHECK(identity_parts_i(2) == -1);
  CHECK(identity_parts_i(0) == 1);
  CHECK(identity_parts_i(10) == 287);
  CHECK(identity_parts_ii(0) == 1);
  CHECK(identity_parts_ii(3) == -1);
  CHECK(identity_parts_ii(4) == 1);
  auto range = a_seq_range(400);
  for (unsigned long n = 0; n <= 400; ++n) {
    CHECK(identity_parts_i(n) == range[n]);
    CHECK(identity_parts_ii(n) == ((n / 2) % 2 == 0 ? 1 : -1));
    CHECK(range[n] % 2 != 0);
  }
}

TEST_CASE("generating function product telescopes") {
  const unsigned long N = 500;
  auto a = a_seq_range(N);
  for (unsigned long d = 0; d <= N; ++d) {
    BigInt coef = a[d];
    if (d >= 1) coef += 3 * a[d - 1];
    if (d >= 2) coef += 4 * a[d - 2];
    CHECK(coef == (d == 0 ? 1 : (d == 1 ? 2 : 0)));
  }
}

TEST_CASE("sine closed form cross-check") {
  const double theta = std::asin(std::sqrt(7.0 / 8.0));
  const double scale = std::sqrt(8.0 / 7.0);
  auto a = a_seq_range(40);
  for (int m = 1; m <= 40; ++m) {
    for (int eps : {1, -1}) {
      BigInt diff = a[m] - eps * pow2(m);
      double lhs = std::abs(diff.get_d());
      double rhs = std::ldexp(scale, m) *
                   std::abs(std::sin((2 * m + 1) * theta) - std::sin(eps * theta));
      CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, lhs));
    }
  }
}

TEST_CASE("dimension formula") {
  CHECK(dim_cusp_forms(12) == 1);
  CHECK(dim_cusp_forms(14) == 0);
  CHECK(dim_cusp_forms(24) == 2);
  CHECK(dim_cusp_forms(26) == 1);
}
