#include "walg/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

CheckResult& VerificationReport::add(const std::string& name, bool ok, const std::string& witness, double wall_ms) {
  checks.push_back({name, ok ? "pass" : "fail", witness, wall_ms, "structural"});
  return checks.back();
}

CheckResult& VerificationReport::compare(const std::string& name, bool ok, const std::string& witness, double wall_ms) {
  checks.push_back({name, ok ? "pass" : "fail", witness, wall_ms, "comparison"});
  return checks.back();
}

bool VerificationReport::all_passed() const { return structural_ok() && comparisons_ok(); }

bool VerificationReport::structural_ok() const {
  for (auto& c : checks)
    if (c.status == "fail" && c.kind == "structural") return false;
  return true;
}

bool VerificationReport::comparisons_ok() const {
  for (auto& c : checks)
    if (c.status == "fail" && c.kind == "comparison") return false;
  return true;
}

Json VerificationReport::to_json(bool with_timing) const {
  Json j;
  j["command"] = command;
  j["N"] = N;
  j["pyramid"] = pyramid;
  j["engine_version"] = engine_version;
  j["order_fingerprint"] = order_fingerprint;
  Json cs = Json::array();
  for (auto& c : checks) {
    Json x = {{"name", c.name}, {"status", c.status}, {"kind", c.kind}, {"witness", c.witness}};
    if (with_timing) x["wall_ms"] = c.wall_ms;
    cs.push_back(x);
  }
  j["checks"] = cs;
  j["data"] = data;
  return j;
}

namespace {

std::string str_field(const Json& j, const char* k) {
  if (!j.contains(k) || !j[k].is_string()) throw ValidationError(std::string("report field '") + k + "' must be a string");
  return j[k].get<std::string>();
}

}  // namespace

VerificationReport VerificationReport::from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("report must be a JSON object");
  VerificationReport r;
  r.command = str_field(j, "command");
  if (!j.contains("N") || !j["N"].is_number_integer()) throw ValidationError("report field 'N' must be an integer");
  r.N = j["N"].get<int>();
  r.pyramid = str_field(j, "pyramid");
  r.engine_version = str_field(j, "engine_version");
  r.order_fingerprint = str_field(j, "order_fingerprint");
  if (!j.contains("checks") || !j["checks"].is_array()) throw ValidationError("report field 'checks' must be an array");
  for (auto& c : j["checks"]) {
    if (!c.is_object()) throw ValidationError("check entries must be objects");
    CheckResult x{str_field(c, "name"), str_field(c, "status"), str_field(c, "witness"), 0, str_field(c, "kind")};
    if (x.status != "pass" && x.status != "fail" && x.status != "skip") throw ValidationError("bad check status '" + x.status + "'");
    if (x.kind != "structural" && x.kind != "comparison") throw ValidationError("bad check kind '" + x.kind + "'");
    if (c.contains("wall_ms")) {
      if (!c["wall_ms"].is_number()) throw ValidationError("check field 'wall_ms' must be a number");
      x.wall_ms = c["wall_ms"].get<double>();
    }
    r.checks.push_back(x);
  }
  r.data = j.contains("data") ? j["data"] : Json(nullptr);
  return r;
}

std::string VerificationReport::table() const {
  std::ostringstream os;
  os << command << "  N=" << N << "  pyramid=" << pyramid << "  order=" << order_fingerprint << "\n";
  for (auto& c : checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%10.1f ms", c.wall_ms);
    os << "  [" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP") << "] "
       << (c.kind == "comparison" ? "(cmp) " : "") << c.name << "  " << ms;
    if (!c.witness.empty()) os << "  " << c.witness;
    os << "\n";
  }
  return os.str();
}

void save_report(const VerificationReport& r, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << dump(r.to_json());
}

VerificationReport load_report(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot read " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return VerificationReport::from_json(j);
}

}  // namespace walg
