#ifndef HL_VERIFY_HPP
#define HL_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "hl/numeric.hpp"
#include "hl/report.hpp"

namespace hl::verify {

/// --bound key=value overrides for suite parameters (m_max, x_bound, box,
/// exp_bound, np_samples, ...).  Unknown keys are ignored by suites that do
/// not read them.
struct Overrides {
  std::map<std::string, u64> values;
  unsigned jobs = 1;

  u64 get(const std::string& key, u64 fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }
};

struct SuiteInfo {
  std::string id;
  std::string description;
};

/// Data-driven registry: one entry per verification suite.
const std::vector<SuiteInfo>& suite_registry();

bool has_suite(const std::string& suite_id);

report::VerificationReport run_suite(const std::string& suite_id,
                                     const Overrides& overrides = {});

std::vector<report::VerificationReport> run_all(const Overrides& overrides = {});

}  // namespace hl::verify

#endif
