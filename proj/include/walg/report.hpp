#pragma once
#include <string>
#include <vector>

#include "walg/serialize.hpp"

namespace walg {

constexpr const char* kEngineVersion = "walg 1.0.0";

struct CheckResult {
  std::string name;
  std::string status;  // "pass", "fail" or "skip"
  std::string witness;
  double wall_ms = 0;
  // "structural" checks fail the run; "comparison" checks (computed vs a displayed formula) only under --strict
  std::string kind = "structural";
};

struct VerificationReport {
  std::string command;
  int N = 0;
  std::string pyramid;
  std::string engine_version = kEngineVersion;
  std::string order_fingerprint;
  std::vector<CheckResult> checks;
  Json data;  // command specific payload, may be null

  CheckResult& add(const std::string& name, bool ok, const std::string& witness = "", double wall_ms = 0);
  CheckResult& compare(const std::string& name, bool ok, const std::string& witness = "", double wall_ms = 0);
  bool all_passed() const;
  bool structural_ok() const;
  bool comparisons_ok() const;
  Json to_json(bool with_timing = true) const;  // without timing: the deterministic payload
  static VerificationReport from_json(const Json& j);  // ValidationError on schema violations
  std::string table() const;
};

void save_report(const VerificationReport& r, const std::string& path);
VerificationReport load_report(const std::string& path);

}  // namespace walg
