#pragma once

#include <vector>

#include "hecketrace/bigint.hpp"

namespace hecketrace {

// One reduced positive definite form a x^2 + b xy + c y^2 of discriminant
// b^2 - 4ac = -n, counted with weight 1/weight_denom.
struct ReducedForm {
  long a = 0;
  long b = 0;
  long c = 0;
  int weight_denom = 1;  // 3 for multiples of (1,1,1), 2 for (1,0,1), else 1
};

struct HurwitzValue {
  long n = 0;
  BigRat value;
  std::vector<ReducedForm> forms;
};

// Hurwitz class number H(n): weighted count of SL2(Z)-classes of positive
// definite binary quadratic forms of discriminant -n. H(0) = -1/12, H(n) = 0
// for n < 0 and for n = 1, 2 (mod 4).
BigRat hurwitz(long n);

// H(n) together with the reduced-form breakdown.
HurwitzValue hurwitz_with_forms(long n);

// H(0..max) in order, zeros included.
std::vector<HurwitzValue> hurwitz_table(long max);

}  // namespace hecketrace
