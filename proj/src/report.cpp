#include "hecketrace/report.hpp"

namespace hecketrace {

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["stage"] = stage;
  j["claim"] = claim;
  j["parameters"] = parameters;
  j["status"] = status;
  j["witnesses"] = witnesses;
  j["runtime_ms"] = runtime_ms;
  j["tool_version"] = kToolVersion;
  return j;
}

nlohmann::ordered_json collision_report_to_json(const CollisionReport& r) {
  nlohmann::ordered_json j;
  j["sequence_id"] = sequence_id_name(r.sequence_id);
  j["range_max"] = r.range_max;
  auto primes = nlohmann::ordered_json::array();
  for (auto p : r.primes) primes.push_back(std::to_string(p));
  j["primes"] = primes;
  auto cols = nlohmann::ordered_json::array();
  for (const auto& c : r.collisions) {
    nlohmann::ordered_json e;
    e["m"] = c.m;
    e["n"] = c.n;
    e["value"] = to_decimal(c.value);
    e["expected"] = c.expected;
    cols.push_back(e);
  }
  j["collisions"] = cols;
  j["fingerprint_false_positives"] = r.fingerprint_false_positives;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace hecketrace
