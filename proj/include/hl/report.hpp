#ifndef HL_REPORT_HPP
#define HL_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hl::report {

enum class ClaimStatus { pass, fail, indeterminate, bounded_pass };

std::string to_string(ClaimStatus s);
ClaimStatus status_from_string(const std::string& s);

struct ClaimResult {
  std::string claim_id;
  std::string anchor;  // the named result the claim re-checks
  ClaimStatus status;
  nlohmann::ordered_json witness;
  std::string bound;  // filled for bounded-pass results
  std::int64_t elapsed_ms = 0;

  bool operator==(const ClaimResult& o) const {
    return claim_id == o.claim_id && anchor == o.anchor && status == o.status &&
           witness == o.witness && bound == o.bound;
  }
};

struct VerificationReport {
  std::string suite_id;
  std::vector<ClaimResult> claims;

  bool all_green() const;
  bool any_fail() const;
  bool any_indeterminate() const;

  bool operator==(const VerificationReport& o) const {
    return suite_id == o.suite_id && claims == o.claims;
  }
};

nlohmann::ordered_json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::ordered_json& j);

/// RFC-style CSV: one row per claim, quotes doubled, fields with commas,
/// quotes or newlines wrapped in quotes.
std::string to_csv(const VerificationReport& r);

}  // namespace hl::report

#endif
