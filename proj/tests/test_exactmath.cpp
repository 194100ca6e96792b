#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecketrace/bigint.hpp"
#include "hecketrace/quadint.hpp"

using namespace hecketrace;

TEST_CASE("binomial small values") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, -1) == 0);
}

TEST_CASE("binomial symmetry and Pascal recurrence up to n = 200") {
  for (unsigned long n = 1; n <= 200; ++n) {
    for (long k = 0; k <= static_cast<long>(n); ++k) {
      CHECK(binomial(n, k) == binomial(n, static_cast<long>(n) - k));
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("binomial handles isolated large arguments") {
  BigInt b = binomial(700000, 3);
  // n(n-1)(n-2)/6 evaluated independently
  BigInt n(700000);
  CHECK(b == n * (n - 1) * (n - 2) / 6);
}

TEST_CASE("decimal round-trip") {
  BigInt x = from_decimal("-123456789123456789123456789");
  CHECK(to_decimal(x) == "-123456789123456789123456789");
  CHECK(to_decimal(BigInt(0)) == "0");
  CHECK_THROWS_AS(from_decimal("12x"), std::invalid_argument);
}

TEST_CASE("make_rat canonicalizes") {
  BigRat q = make_rat(4, -6);
  CHECK(q.get_num() == -2);
  CHECK(q.get_den() == 3);
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
  CHECK(to_integer(make_rat(8, 4)) == 2);
  CHECK_THROWS_AS(to_integer(make_rat(1, 3)), std::logic_error);
}

TEST_CASE("v2") {
  CHECK(v2(BigInt(-24)) == 3);
  CHECK(v2(BigInt(1)) == 0);
  CHECK(v2(BigInt(0)) == kV2Infinity);
  CHECK(v2(pow2(100)) == 100);
}

TEST_CASE("quad_pow defining relation") {
  QuadInt w = QuadInt::omega();
  CHECK(quad_pow(w, 2) == QuadInt(-2, 1));
  CHECK(quad_pow(w, 0) == QuadInt::one());
  CHECK(quad_pow(w, 3) == QuadInt(-2, -1));
}

TEST_CASE("omega conjugate identities") {
  QuadInt w = QuadInt::omega();
  CHECK(w * w.conj() == QuadInt(2, 0));
  CHECK(w + w.conj() == QuadInt(1, 0));
}

TEST_CASE("norm is multiplicative, conjugation a homomorphism") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    QuadInt x(d(rng), d(rng)), y(d(rng), d(rng));
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
}

TEST_CASE("quad_div_exact") {
  QuadInt w = QuadInt::omega();
  QuadInt d = w - w.conj();
  CHECK(quad_div_exact(d, d) == QuadInt::one());
  QuadInt prod = QuadInt(3, -5) * d;
  CHECK(quad_div_exact(prod, d) == QuadInt(3, -5));
  CHECK_THROWS_AS(quad_div_exact(QuadInt::one(), d), std::domain_error);
}
