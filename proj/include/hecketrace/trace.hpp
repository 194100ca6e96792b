#pragma once

#include <vector>

#include "hecketrace/bigint.hpp"

namespace hecketrace {

// The order-2 recurrence a_0 = 1, a_1 = -1, a_n = -3 a_{n-1} - 4 a_{n-2}.
// Every a_n is odd.
BigInt a_seq(unsigned long n);

// a_0 .. a_nmax in one pass.
std::vector<BigInt> a_seq_range(unsigned long nmax);

// a_n = (w^{2n+1} - wbar^{2n+1}) / (w - wbar) evaluated exactly in Z[w].
// Throws std::domain_error if the numerator is not an exact multiple of
// w - wbar (which would signal an arithmetic bug).
BigInt a_seq_closed(unsigned long n);

// [x^m] (1 - t x + n x^2)^{-1} by the recurrence P_m = t P_{m-1} - n P_{m-2}.
BigInt p_coeff(unsigned long m, const BigInt& t, const BigInt& n);

// Same coefficient (m = 2k-2) via the closed binomial sum
// sum_j (-1)^j C(2k-2-j, j) n^j t^{2k-2-2j}, k >= 2. Uses 0^0 = 1.
BigInt p_closed(unsigned long k, const BigInt& t, const BigInt& n);

// Trace of the Hecke operator T_n on weight-2k level-one cusp forms via the
// class-number formula: -(1/2) sum_{t^2 <= 4n} P_{2k}(t,n) H(4n - t^2)
// - (1/2) sum_{dd' = n} min(d,d')^{2k-1}. Rational intermediates must cancel
// to an integer. Throws std::invalid_argument for odd weight or weight < 4.
BigInt trace_es(unsigned long weight, unsigned long n);

// Trace of T_2 at weight 2k via the combinatorial expansion
// (-2)^{k-2} - 1 - sum_{j=0}^{k-1} (-1)^j C(2k-2-j, j) 2^j (1 + 2^{2k-3-2j}).
// The j = k-1 term is rational; integrality of the total is asserted.
BigInt trace_comb(unsigned long k);

// Trace of T_2 at weight 2k via the recurrence:
//   -a_{k-1} - 1             k = 2, 3 (mod 4)
//   -a_{k-1} - 1 + 2^{k-1}   k = 0 (mod 4)
//   -a_{k-1} - 1 - 2^{k-1}   k = 1 (mod 4)
BigInt trace_rec(unsigned long k);

// Case split of trace_rec: 0 for k = 2,3, +1 for k = 0, -1 for k = 1 (mod 4).
int trace_rec_epsilon(unsigned long k);

// sum_{j=0}^n (-1)^j C(2n-j, j) 2^j; equals a_n.
BigInt identity_parts_i(unsigned long n);

// sum_{j=0}^n (-1)^j C(2n-j, j) 2^{n-j}; equals (-1)^{floor(n/2)}.
BigInt identity_parts_ii(unsigned long n);

// dim S_{2k}(SL2(Z)) by the classical piecewise formula; cross-check oracle
// for trace_es(2k, 1).
long dim_cusp_forms(unsigned long weight);

}  // namespace hecketrace
