#pragma once

#include <string>

#include "hecketrace/bigint.hpp"

namespace hecketrace {

// Element u + v*w of Z[w] where w^2 = w - 2 (w = (1 - sqrt(-7))/2).
// Conjugate of u + v*w is (u + v) - v*w; norm is u^2 + uv + 2v^2.
struct QuadInt {
  BigInt u;
  BigInt v;

  QuadInt() : u(0), v(0) {}
  QuadInt(BigInt u_, BigInt v_) : u(std::move(u_)), v(std::move(v_)) {}

  static QuadInt omega() { return QuadInt(0, 1); }
  static QuadInt one() { return QuadInt(1, 0); }

  QuadInt conj() const { return QuadInt(u + v, -v); }
  BigInt norm() const { return u * u + u * v + 2 * v * v; }

  bool operator==(const QuadInt&) const = default;

  QuadInt operator+(const QuadInt& o) const { return QuadInt(u + o.u, v + o.v); }
  QuadInt operator-(const QuadInt& o) const { return QuadInt(u - o.u, v - o.v); }
  QuadInt operator-() const { return QuadInt(-u, -v); }

  QuadInt operator*(const QuadInt& o) const {
    // (u1 + v1 w)(u2 + v2 w) with w^2 = w - 2
    return QuadInt(u * o.u - 2 * v * o.v, u * o.v + v * o.u + v * o.v);
  }

  std::string str() const {
    return "(" + to_decimal(u) + ", " + to_decimal(v) + ")";
  }
};

// Exact e-th power under the w^2 = w - 2 multiplication rule.
QuadInt quad_pow(QuadInt base, unsigned long e);

// Exact quotient q with q * d == x; throws std::domain_error when x is not a
// multiple of d in Z[w].
QuadInt quad_div_exact(const QuadInt& x, const QuadInt& d);

}  // namespace hecketrace
