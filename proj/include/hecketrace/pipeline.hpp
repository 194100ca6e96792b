#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecketrace/report.hpp"

namespace hecketrace {

struct Config {
  long precision_bits = 96;
  std::vector<std::uint64_t> primes = default_primes();
  long a_max = 352000;        // plain-sequence collision scan range
  long eps_max = 302000;      // shifted-sequence scan range
  long theorem_kmax = 20000;  // pairwise-distinct trace check range
  long oracle_kmax = 2000;    // trace formula cross-validation range
  long identities_nmax = 5000;
  long genfun_degree = 2000;
  long valuation_kmax = 1000;
  std::string format = "json";  // json | csv | text
  std::string out_path;         // empty: stdout

  // Throws std::invalid_argument when a field is out of contract
  // (precision >= 32, ranges >= 1, known format).
  void validate() const;
};

// Runs every verification stage in proof order: the combinatorial identity
// suite, the trace-oracle equivalence, the 2-adic valuation suite, the
// congruence-filter table, the analytic thresholds, the three collision
// scans, and the final pairwise-distinctness check. One report per stage.
std::vector<VerificationReport> run_pipeline(const Config& cfg);

// True iff every stage passed (expected witnesses count as passes).
bool pipeline_ok(const std::vector<VerificationReport>& reports);

}  // namespace hecketrace
