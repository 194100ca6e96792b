#pragma once

#include <string>

#include <json.hpp>

#include "hecketrace/search.hpp"

namespace hecketrace {

inline constexpr const char* kToolVersion = "1.0.0";

// Machine-readable outcome of one verification stage. Field order is fixed
// by construction (ordered_json), so serialized reports are byte-stable.
// status is "pass", "fail" or "expected-witness"; a fail always carries
// witnesses. Exact integers are emitted as decimal strings so downstream
// consumers never overflow.
struct VerificationReport {
  std::string stage;
  std::string claim;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::string status = "pass";
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  long runtime_ms = 0;

  nlohmann::ordered_json to_json() const;
  bool passed() const { return status != "fail"; }
};

nlohmann::ordered_json collision_report_to_json(const CollisionReport& r);

}  // namespace hecketrace
