#include "hecketrace/hurwitz.hpp"

#include <stdexcept>

namespace hecketrace {

namespace {

// Weight rule: forms proportional to (1,1,1) have the extra automorphism of
// order 3, forms proportional to (1,0,1) the one of order 2. Imprimitive
// scaled copies keep the weight, e.g. (2,2,2) at n = 12.
int weight_denom_of(long a, long b, long c) {
  if (b == a && c == a) return 3;
  if (b == 0 && c == a) return 2;
  return 1;
}

}  // namespace

HurwitzValue hurwitz_with_forms(long n) {
  HurwitzValue out;
  out.n = n;
  if (n < 0) {
    out.value = 0;
    return out;
  }
  if (n == 0) {
    out.value = make_rat(-1, 12);
    return out;
  }
  long r = n % 4;
  if (r == 1 || r == 2) {
    out.value = 0;
    return out;
  }
  BigRat sum = 0;
  // Reduced domain: |b| <= a <= c, with b >= 0 when |b| = a or a = c.
  // For each a, b with b^2 - 4ac = -n, c = (b^2 + n) / 4a must be integral.
  for (long a = 1; 3 * a * a <= n; ++a) {
    for (long b = -a; b <= a; ++b) {
      if (((b % 2) + 2) % 2 != n % 2) continue;
      long num = b * b + n;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      int wd = weight_denom_of(a, b, c);
      out.forms.push_back(ReducedForm{a, b, c, wd});
      sum += make_rat(1, wd);
    }
  }
  out.value = sum;
  return out;
}

BigRat hurwitz(long n) { return hurwitz_with_forms(n).value; }

std::vector<HurwitzValue> hurwitz_table(long max) {
  if (max < 0) throw std::invalid_argument("hurwitz_table: max must be >= 0");
  std::vector<HurwitzValue> t;
  t.reserve(static_cast<size_t>(max) + 1);
  for (long n = 0; n <= max; ++n) t.push_back(hurwitz_with_forms(n));
  return t;
}

}  // namespace hecketrace
