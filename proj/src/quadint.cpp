#include "hecketrace/quadint.hpp"

#include <stdexcept>

namespace hecketrace {

QuadInt quad_pow(QuadInt base, unsigned long e) {
  QuadInt r = QuadInt::one();
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

QuadInt quad_div_exact(const QuadInt& x, const QuadInt& d) {
  // Solve (a + b w)(d.u + d.v w) = x by Cramer; determinant is norm(d).
  BigInt det = d.norm();
  if (det == 0) throw std::domain_error("quad_div_exact: division by zero");
  BigInt na = x.u * (d.u + d.v) + 2 * d.v * x.v;
  BigInt nb = x.v * d.u - x.u * d.v;
  if (na % det != 0 || nb % det != 0) {
    throw std::domain_error("quad_div_exact: " + x.str() +
                            " is not a multiple of " + d.str());
  }
  QuadInt q(na / det, nb / det);
  if (!(q * d == x)) throw std::logic_error("quad_div_exact: verification failed");
  return q;
}

}  // namespace hecketrace
