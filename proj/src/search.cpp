#include "hecketrace/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "hecketrace/trace.hpp"

namespace hecketrace {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<u128>(a) * b) % p);
}

u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

// Streams the residue tuple of one sequence term at a time. After
// construction the stream sits at a-index 1 (acur = a_1, twopow = 2^1).
class ResidueStream {
 public:
  ResidueStream(SequenceId id, const std::vector<u64>& primes)
      : id_(id), primes_(primes) {
    const size_t k = primes.size();
    aprev_.resize(k);
    acur_.resize(k);
    twopow_.resize(k);
    for (size_t i = 0; i < k; ++i) {
      aprev_[i] = 1;                  // a_0
      acur_[i] = primes_[i] - 1;      // a_1 = -1
      twopow_[i] = 2 % primes_[i];    // 2^1
    }
    index_ = 1;
  }

  // Advance the recurrence by one index.
  void step() {
    for (size_t i = 0; i < primes_.size(); ++i) {
      const u64 p = primes_[i];
      u64 next = submod(0, (3 * static_cast<u128>(acur_[i]) +
                            4 * static_cast<u128>(aprev_[i])) % p, p);
      aprev_[i] = acur_[i];
      acur_[i] = next;
      twopow_[i] = mulmod(twopow_[i], 2, p);
    }
    ++index_;
  }

  long index() const { return index_; }

  // Residues of the sequence value at the current index.
  void value(std::vector<u64>& out) const {
    out.resize(primes_.size());
    for (size_t i = 0; i < primes_.size(); ++i) {
      const u64 p = primes_[i];
      u64 a = acur_[i];
      switch (id_) {
        case SequenceId::A:
          out[i] = a;
          break;
        case SequenceId::AMinus2n:  // a_n - 2^n
          out[i] = submod(a, twopow_[i], p);
          break;
        case SequenceId::APlus2n:   // a_n + 2^n
          out[i] = (a + twopow_[i]) % p;
          break;
        case SequenceId::Trace: {
          // Tr T_2(2k) at k = index: -a_{k-1} - 1 + eps 2^{k-1}; the stream
          // is positioned so that acur_ = a_{k-1}, twopow_ = 2^{k-1}.
          long k = index_ + 1;
          u64 t = submod(submod(0, a, p), 1 % p, p);
          int eps = trace_rec_epsilon(static_cast<unsigned long>(k));
          if (eps == 1) t = (t + twopow_[i]) % p;
          if (eps == -1) t = submod(t, twopow_[i], p);
          out[i] = t;
          break;
        }
      }
    }
  }

  // Residues at index 0 (before any step), for the non-trace scans.
  void value_at_zero(std::vector<u64>& out) const {
    out.resize(primes_.size());
    for (size_t i = 0; i < primes_.size(); ++i) {
      const u64 p = primes_[i];
      switch (id_) {
        case SequenceId::A:
          out[i] = 1;
          break;
        case SequenceId::AMinus2n:
          out[i] = submod(1, 1, p);  // a_0 - 2^0 = 0
          break;
        case SequenceId::APlus2n:
          out[i] = 2 % p;            // a_0 + 2^0 = 2
          break;
        case SequenceId::Trace:
          throw std::logic_error("trace stream has no index 0");
      }
    }
  }

 private:
  SequenceId id_;
  std::vector<u64> primes_;
  std::vector<u64> aprev_, acur_, twopow_;
  long index_;
};

u64 mix_hash(const std::vector<u64>& tuple) {
  u64 h = 0x9e3779b97f4a7c15ULL;
  for (u64 v : tuple) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
  }
  return h;
}

// Exact sequence value for confirmation, recomputed from scratch.
BigInt exact_value(SequenceId id, long idx) {
  switch (id) {
    case SequenceId::A:
      return a_seq(static_cast<unsigned long>(idx));
    case SequenceId::AMinus2n:
      return a_seq(static_cast<unsigned long>(idx)) -
             pow2(static_cast<unsigned long>(idx));
    case SequenceId::APlus2n:
      return a_seq(static_cast<unsigned long>(idx)) +
             pow2(static_cast<unsigned long>(idx));
    case SequenceId::Trace:
      return trace_rec(static_cast<unsigned long>(idx));
  }
  throw std::logic_error("exact_value: bad sequence id");
}

CollisionReport scan(SequenceId id, long first_index, long last_index,
                     const std::vector<u64>& primes) {
  validate_primes(primes);
  auto t0 = std::chrono::steady_clock::now();

  CollisionReport report;
  report.sequence_id = id;
  report.range_max = last_index;
  report.primes = primes;

  const size_t width = primes.size();
  const size_t count = static_cast<size_t>(last_index - first_index + 1);
  std::vector<u64> residues;
  residues.reserve(count * width);
  std::unordered_multimap<u64, long> seen;
  seen.reserve(count * 2);
  std::vector<std::pair<long, long>> candidates;

  std::vector<u64> tuple(width);
  auto visit = [&](long idx) {
    u64 h = mix_hash(tuple);
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      const u64* other = residues.data() +
                         static_cast<size_t>(it->second - first_index) * width;
      if (std::equal(tuple.begin(), tuple.end(), other)) {
        candidates.emplace_back(it->second, idx);
      }
    }
    seen.emplace(h, idx);
    residues.insert(residues.end(), tuple.begin(), tuple.end());
  };

  ResidueStream stream(id, primes);
  if (id == SequenceId::Trace) {
    // idx is the weight index k; the stream sits at a-index k-1 so that
    // acur = a_{k-1} and twopow = 2^{k-1}.
    while (stream.index() < first_index - 1) stream.step();
    for (long k = first_index; k <= last_index; ++k) {
      stream.value(tuple);
      visit(k);
      stream.step();
    }
  } else {
    if (first_index == 0) {
      stream.value_at_zero(tuple);
      visit(0);
    }
    for (long idx = 1; idx <= last_index; ++idx) {
      if (idx > 1) stream.step();
      if (idx < std::max(first_index, 1L)) continue;
      stream.value(tuple);
      visit(idx);
    }
  }

  // Fingerprint matches are only candidates; equality is decided by exact
  // big-integer recomputation.
  std::sort(candidates.begin(), candidates.end());
  for (auto [m, n] : candidates) {
    BigInt vm = exact_value(id, m);
    BigInt vn = exact_value(id, n);
    if (vm == vn) {
      report.collisions.push_back(
          Collision{m, n, vm, is_expected_collision(id, m, n)});
    } else {
      ++report.fingerprint_false_positives;
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  report.runtime_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  return report;
}

}  // namespace

std::string sequence_id_name(SequenceId id) {
  switch (id) {
    case SequenceId::A: return "a";
    case SequenceId::AMinus2n: return "a_minus_2n";
    case SequenceId::APlus2n: return "a_plus_2n";
    case SequenceId::Trace: return "trace";
  }
  return "?";
}

const std::vector<u64>& default_primes() {
  static const std::vector<u64> primes = {4611686018427387847ULL,
                                          4611686018427387817ULL,
                                          4611686018427387787ULL};
  return primes;
}

void validate_primes(const std::vector<u64>& primes) {
  if (primes.size() < 2) {
    throw std::invalid_argument("fingerprints need at least 2 primes");
  }
  std::set<u64> distinct(primes.begin(), primes.end());
  if (distinct.size() != primes.size()) {
    throw std::invalid_argument("fingerprint primes must be distinct");
  }
  for (u64 p : primes) {
    if (p <= (1ULL << 32)) {
      throw std::invalid_argument("fingerprint primes must exceed 2^32");
    }
  }
}

CollisionReport find_repeats_a(long max_index, const std::vector<u64>& primes) {
  if (max_index < 1) throw std::invalid_argument("find_repeats_a: max_index >= 1");
  return scan(SequenceId::A, 0, max_index, primes);
}

CollisionReport find_repeats_eps(long max_index, int eps,
                                 const std::vector<u64>& primes) {
  if (max_index < 1) throw std::invalid_argument("find_repeats_eps: max_index >= 1");
  if (eps != 1 && eps != -1) {
    throw std::invalid_argument("find_repeats_eps: eps must be +1 or -1");
  }
  return scan(eps == 1 ? SequenceId::AMinus2n : SequenceId::APlus2n, 0,
              max_index, primes);
}

CollisionReport verify_theorem(long k_max, const std::vector<u64>& primes) {
  if (k_max < 6) throw std::invalid_argument("verify_theorem: k_max >= 6");
  return scan(SequenceId::Trace, 6, k_max, primes);
}

bool verify_reduction_bound(long m, long n, SequenceId id) {
  if (!(1 <= m && m < n)) {
    throw std::invalid_argument("verify_reduction_bound: need 1 <= m < n");
  }
  double c = (id == SequenceId::AMinus2n || id == SequenceId::APlus2n) ? 3.0
                                                                       : 2.0;
  return static_cast<double>(m) <=
         c + std::log(static_cast<double>(n)) / std::log(2.0);
}

std::vector<u64> trace_residues_mod(u64 p, long k_max) {
  if (k_max < 6) throw std::invalid_argument("trace_residues_mod: k_max >= 6");
  ResidueStream stream(SequenceId::Trace, std::vector<u64>{p});
  while (stream.index() < 5) stream.step();
  std::vector<u64> out;
  std::vector<u64> tuple;
  for (long k = 6; k <= k_max; ++k) {
    stream.value(tuple);  // stream holds a_{k-1}, 2^{k-1}
    out.push_back(tuple[0]);
    stream.step();
  }
  return out;
}

bool is_expected_collision(SequenceId id, long m, long n) {
  switch (id) {
    case SequenceId::A:
      return (m == 1 && n == 2) || (m == 1 && n == 6) || (m == 2 && n == 6);
    case SequenceId::APlus2n:
      return m == 5 && n == 9;
    default:
      return false;
  }
}

}  // namespace hecketrace
