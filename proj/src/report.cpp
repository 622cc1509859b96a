#include "hl/report.hpp"

#include <sstream>

#include "hl/error.hpp"

namespace hl::report {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    case ClaimStatus::indeterminate:
      return "indeterminate";
    case ClaimStatus::bounded_pass:
      return "bounded-pass";
  }
  return "?";
}

ClaimStatus status_from_string(const std::string& s) {
  if (s == "pass") return ClaimStatus::pass;
  if (s == "fail") return ClaimStatus::fail;
  if (s == "indeterminate") return ClaimStatus::indeterminate;
  if (s == "bounded-pass") return ClaimStatus::bounded_pass;
  throw ArgumentError("unknown claim status: " + s);
}

bool VerificationReport::all_green() const {
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::fail || c.status == ClaimStatus::indeterminate) {
      return false;
    }
  }
  return true;
}

bool VerificationReport::any_fail() const {
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::fail) return true;
  }
  return false;
}

bool VerificationReport::any_indeterminate() const {
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::indeterminate) return true;
  }
  return false;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) {
    nlohmann::ordered_json row;
    row["claim"] = c.claim_id;
    row["anchor"] = c.anchor;
    row["status"] = to_string(c.status);
    row["bound"] = c.bound;
    row["witness"] = c.witness;
    row["elapsed_ms"] = c.elapsed_ms;
    claims.push_back(std::move(row));
  }
  nlohmann::ordered_json out;
  out["suite_id"] = r.suite_id;
  out["claims"] = std::move(claims);
  return out;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.suite_id = j.at("suite_id").get<std::string>();
  for (const auto& row : j.at("claims")) {
    ClaimResult c;
    c.claim_id = row.at("claim").get<std::string>();
    c.anchor = row.at("anchor").get<std::string>();
    c.status = status_from_string(row.at("status").get<std::string>());
    c.bound = row.at("bound").get<std::string>();
    c.witness = row.at("witness");
    c.elapsed_ms = row.at("elapsed_ms").get<std::int64_t>();
    r.claims.push_back(std::move(c));
  }
  return r;
}

namespace {

std::string csv_quote(const std::string& field) {
  bool needs = field.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite_id,claim,anchor,status,bound,witness,elapsed_ms\n";
  for (const auto& c : r.claims) {
    os << csv_quote(r.suite_id) << ',' << csv_quote(c.claim_id) << ','
       << csv_quote(c.anchor) << ',' << csv_quote(to_string(c.status)) << ','
       << csv_quote(c.bound) << ',' << csv_quote(c.witness.dump()) << ','
       << c.elapsed_ms << '\n';
  }
  return os.str();
}

}  // namespace hl::report
