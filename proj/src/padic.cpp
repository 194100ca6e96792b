#include "hecketrace/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecketrace {

namespace {

BigInt mod_pow2(const BigInt& x, long bits) {
  BigInt r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

BigInt inv_odd_mod_pow2(const BigInt& u, long bits) {
  BigInt mod = pow2(static_cast<unsigned long>(bits));
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw std::domain_error("inv_odd_mod_pow2: even operand");
  }
  return r;
}

}  // namespace

Padic2 Padic2::from_integer(const BigInt& x, long abs_prec) {
  if (abs_prec <= 0) throw std::invalid_argument("Padic2: precision must be > 0");
  BigInt r = mod_pow2(x, abs_prec);
  if (r == 0) {
    return x == 0 ? exact_zero() : zero_to_precision(abs_prec);
  }
  long v = v2(r);
  Padic2 p;
  p.zero_ = false;
  p.val_ = v;
  p.prec_ = abs_prec - v;
  p.unit_ = mod_pow2(r >> v, p.prec_);
  return p;
}

Padic2 Padic2::exact_zero() { return Padic2(); }

Padic2 Padic2::zero_to_precision(long abs_prec) {
  Padic2 p;
  p.zero_ = true;
  p.prec_ = abs_prec;
  return p;
}

Padic2 Padic2::from_unit(long val, const BigInt& unit, long rel_prec) {
  if (rel_prec <= 0) throw std::invalid_argument("Padic2: precision must be > 0");
  Padic2 p;
  p.zero_ = false;
  p.val_ = val;
  p.prec_ = rel_prec;
  p.unit_ = mod_pow2(unit, rel_prec);
  if (p.unit_ % 2 == 0) throw std::invalid_argument("Padic2: unit must be odd");
  return p;
}

long Padic2::valuation() const {
  if (zero_) {
    throw std::domain_error(
        "Padic2::valuation: value is zero to working precision");
  }
  return val_;
}

const BigInt& Padic2::unit() const {
  if (zero_) throw std::domain_error("Padic2::unit: zero value");
  return unit_;
}

long Padic2::rel_precision() const {
  if (zero_) throw std::domain_error("Padic2::rel_precision: zero value");
  return prec_;
}

long Padic2::abs_precision() const {
  if (zero_) return prec_;
  return val_ + prec_;
}

BigInt Padic2::residue(long bits) const {
  if (bits <= 0) throw std::invalid_argument("Padic2::residue: bits must be > 0");
  if (bits > abs_precision()) {
    throw std::domain_error("Padic2::residue: only " +
                            std::to_string(abs_precision()) +
                            " bits guaranteed, " + std::to_string(bits) +
                            " requested");
  }
  if (zero_) return 0;
  if (val_ < 0) throw std::domain_error("Padic2::residue: negative valuation");
  if (val_ >= bits) return 0;
  return mod_pow2(unit_ << val_, bits);
}

Padic2 Padic2::operator+(const Padic2& o) const {
  if (is_exact_zero()) return o;
  if (o.is_exact_zero()) return *this;
  long minv = std::min(zero_ ? prec_ : val_, o.zero_ ? o.prec_ : o.val_);
  long p = std::min(abs_precision(), o.abs_precision());
  // Work on shifted residues so negative valuations stay representable.
  long shift = std::min(minv, 0L);
  long bits = p - shift;
  BigInt r = 0;
  if (!zero_) r += mod_pow2(unit_ << (val_ - shift), bits);
  if (!o.zero_) r += mod_pow2(o.unit_ << (o.val_ - shift), bits);
  r = mod_pow2(r, bits);
  if (r == 0) return zero_to_precision(p);
  long v = v2(r) + shift;
  Padic2 out;
  out.zero_ = false;
  out.val_ = v;
  out.prec_ = p - v;
  out.unit_ = mod_pow2(r >> (v - shift), out.prec_);
  return out;
}

Padic2 Padic2::operator-() const {
  if (zero_) return *this;
  Padic2 p = *this;
  p.unit_ = mod_pow2(-p.unit_, p.prec_);
  return p;
}

Padic2 Padic2::operator-(const Padic2& o) const { return *this + (-o); }

Padic2 Padic2::operator*(const Padic2& o) const {
  if (is_exact_zero() || o.is_exact_zero()) return exact_zero();
  if (zero_ || o.zero_) {
    // v2(xy) >= (bound on x) + (bound/valuation of y)
    long b = (zero_ ? prec_ : val_) + (o.zero_ ? o.prec_ : o.val_);
    return zero_to_precision(b);
  }
  Padic2 out;
  out.zero_ = false;
  out.val_ = val_ + o.val_;
  out.prec_ = std::min(prec_, o.prec_);
  out.unit_ = mod_pow2(unit_ * o.unit_, out.prec_);
  return out;
}

Padic2 Padic2::operator/(const Padic2& o) const {
  if (o.zero_) throw std::domain_error("Padic2: division by (near-)zero");
  if (is_exact_zero()) return exact_zero();
  if (zero_) return zero_to_precision(prec_ - o.val_);
  Padic2 out;
  out.zero_ = false;
  out.val_ = val_ - o.val_;
  out.prec_ = std::min(prec_, o.prec_);
  out.unit_ = mod_pow2(unit_ * inv_odd_mod_pow2(o.unit_, out.prec_), out.prec_);
  return out;
}

Padic2 Padic2::pow(unsigned long e) const {
  if (e == 0) return from_integer(1, zero_ ? prec_ : prec_ + val_);
  if (zero_) {
    if (is_exact_zero()) return exact_zero();
    return zero_to_precision(prec_ * static_cast<long>(e));
  }
  Padic2 out;
  out.zero_ = false;
  out.val_ = val_ * static_cast<long>(e);
  out.prec_ = prec_;
  BigInt mod = pow2(static_cast<unsigned long>(prec_));
  mpz_powm_ui(out.unit_.get_mpz_t(), unit_.get_mpz_t(), e, mod.get_mpz_t());
  return out;
}

bool Padic2::congruent(const Padic2& o, long bits) const {
  return residue(bits) == o.residue(bits);
}

Padic2 sqrt2(const BigInt& u, int branch_mod8, long precision) {
  if (mod_pow2(u - 1, 3) != 0) {
    throw std::invalid_argument("sqrt2: u must be 1 (mod 8)");
  }
  if (branch_mod8 % 2 == 0) {
    throw std::invalid_argument("sqrt2: branch must be odd");
  }
  BigInt s = ((branch_mod8 % 8) + 8) % 8;
  if (mod_pow2(s * s - u, 4) != 0) {
    throw std::invalid_argument("sqrt2: branch " + to_decimal(s) +
                                " does not square to u mod 16");
  }
  // After s^2 = u (mod 2^j) the root is pinned mod 2^{j-1}; lift until the
  // requested number of guaranteed bits.
  long j = 4;
  while (j - 1 < precision) {
    BigInt delta = (s * s - u) >> j;
    if (mpz_odd_p(delta.get_mpz_t())) s += pow2(static_cast<unsigned long>(j - 1));
    ++j;
  }
  return Padic2::from_unit(0, mod_pow2(s, j - 1), j - 1);
}

std::pair<Padic2, Padic2> omega2(long precision) {
  if (precision < 8) throw std::invalid_argument("omega2: precision must be >= 8");
  Padic2 s = sqrt2(-7, 5, precision + 4);
  long bits = s.rel_precision();
  const BigInt& sv = s.unit();
  // w = (1-s)/2, wbar = (1+s)/2; v2(1-s) = 2 on this branch, v2(1+s) = 1.
  BigInt num_w = mod_pow2(1 - sv, bits);
  BigInt num_wb = mod_pow2(1 + sv, bits);
  if (v2(num_w) != 2 || v2(num_wb) != 1) {
    throw std::logic_error("omega2: branch does not give v2(w) = 1");
  }
  Padic2 w = Padic2::from_unit(1, num_w >> 2, bits - 2);
  Padic2 wb = Padic2::from_unit(0, num_wb >> 1, bits - 1);
  // w - wbar = -s must be a unit; 1 - w must be a unit.
  if ((w - wb).valuation() != 0 ||
      (Padic2::from_integer(1, bits) - w).valuation() != 0) {
    throw std::logic_error("omega2: unit assertions failed");
  }
  return {w, wb};
}

Padic2 log2adic(const Padic2& x, long precision_target) {
  if (precision_target <= 0) {
    throw std::invalid_argument("log2adic: precision target must be > 0");
  }
  if (x.is_zero() || x.valuation() != 0) {
    throw std::domain_error("log2adic: argument must be an odd unit");
  }
  Padic2 d = x - Padic2::from_integer(1, x.abs_precision());
  if (d.is_zero()) {
    // x = 1 to full precision: log is 0 to (at least) the same precision.
    return Padic2::zero_to_precision(
        std::min(d.abs_precision(), precision_target));
  }
  long w = d.valuation();
  if (w < 1) throw std::domain_error("log2adic: v2(x - 1) must be >= 1");

  // Truncate at the least n0 with n*w - floor(log2 n) >= target; every
  // dropped term then has valuation >= target.
  long n0 = 1;
  auto floor_log2 = [](long n) {
    long l = 0;
    while ((1L << (l + 1)) <= n) ++l;
    return l;
  };
  while (n0 * w - floor_log2(n0) < precision_target) ++n0;

  // The result is only claimed modulo 2^min(target, abs prec of input);
  // internal guard bits absorb the divisions by n. The stored residue is an
  // exact integer, so it extends with zeros into the guard range.
  long claim = std::min(precision_target, d.abs_precision());
  long guard = floor_log2(n0) + 2;
  long work = claim + guard;

  BigInt dres = d.residue(std::min(work, d.abs_precision()));
  BigInt acc = 0;
  BigInt dpow = dres;
  for (long n = 1; n <= n0; ++n) {
    long tv = v2(BigInt(n));
    long nodd = n >> tv;
    BigInt term = mod_pow2(dpow * inv_odd_mod_pow2(BigInt(nodd), work), work);
    // n*w >= tv always, so dividing the 2-part of n out of d^n is exact
    term >>= tv;
    if (n % 2 == 1) {
      acc += term;
    } else {
      acc -= term;
    }
    acc = mod_pow2(acc, work);
    dpow = mod_pow2(dpow * dres, work);
  }
  return Padic2::from_integer(acc, claim);
}

Padic2 omega_const(long t, long precision) {
  if (t % 8 != 0) throw std::invalid_argument("omega_const: t must be 0 (mod 8)");
  long inner = precision + 12;
  auto [w, wb] = omega2(inner);
  Padic2 one = Padic2::from_integer(1, inner);
  Padic2 two_w_minus_1 = w + w - one;
  Padic2 arg = Padic2::from_integer(1 + t, inner + 8) * two_w_minus_1;
  Padic2 num = log2adic(arg, precision + 8);
  Padic2 den = log2adic(one - w, precision + 8);
  Padic2 ratio = num / den;
  if (ratio.is_zero() || ratio.valuation() != 0) {
    throw std::domain_error(
        "omega_const: ratio of logarithms is not an odd unit; Omega_t would "
        "leave Z_2 on this branch");
  }
  Padic2 shifted = ratio + one;
  if (shifted.is_zero() || shifted.valuation() < 1) {
    throw std::domain_error("omega_const: halving is not exact");
  }
  // Divide by 2: drop one from the valuation.
  return Padic2::from_unit(shifted.valuation() - 1, shifted.unit(),
                           shifted.rel_precision());
}

ValuationPrediction predict_v2_shifted_trace(long k, long t, long precision) {
  if (k < 2) throw std::invalid_argument("predict: k must be >= 2");
  Padic2 om = omega_const(t, precision);
  Padic2 diff = Padic2::from_integer(k, om.abs_precision()) - om;
  if (diff.is_zero()) {
    throw std::domain_error(
        "predict: k - Omega_t vanishes to working precision; increase the "
        "precision to resolve the valuation");
  }
  ValuationPrediction p;
  p.k = k;
  p.t = t;
  p.predicted = 3 + diff.valuation();
  p.equality_guaranteed = diff.valuation() < k - 4;
  return p;
}

bool congruence_filter(long k, long k2, long precision) {
  if (k < 6 || k2 < 6) {
    throw std::invalid_argument("congruence_filter: weights below 2k = 12");
  }
  Padic2 om0 = omega_const(0, precision);
  Padic2 om8 = omega_const(8, precision);
  auto clip2 = [](const Padic2& diff) {
    return diff.is_zero() ? 2L : std::min(diff.valuation(), 2L);
  };
  auto signature = [&](long kk) {
    Padic2 x = Padic2::from_integer(kk, om0.abs_precision());
    Padic2 y = Padic2::from_integer(kk, om8.abs_precision());
    return std::pair<long, long>(clip2(x - om0), clip2(y - om8));
  };
  return signature(k) == signature(k2);
}

}  // namespace hecketrace
