#include "walg/serialize.hpp"

#include <algorithm>

#include "walg/errors.hpp"

namespace walg {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ValidationError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

Json mono_json(const GeneratorOrder& o, const Monomial& m) {
  Json arr = Json::array();
  for (auto& [g, e] : factors(o, m)) arr.push_back(Json::array({g.i, g.j, e}));
  return arr;
}

Monomial mono_from_json(const Json& j, const GeneratorOrder& o) {
  if (!j.is_array()) throw ValidationError("'mono' must be an array");
  std::vector<std::pair<GenIdx, int>> f;
  for (auto& x : j) {
    if (!x.is_array() || x.size() != 3) throw ValidationError("monomial factor must be [i, j, exp]");
    for (auto& v : x)
      if (!v.is_number_integer()) throw ValidationError("monomial factor entries must be integers");
    f.push_back({{x[0].get<int>(), x[1].get<int>()}, x[2].get<int>()});
  }
  return monomial_from_factors(o, f);
}

void check_N(const Json& j, const OrderPtr& o) {
  int N = int_field(j, "N");
  if (N != o->N()) throw ValidationError("N in JSON does not match the ambient order");
}

}  // namespace

Json to_json(const HbarPoly& c) {
  Json arr = Json::array();
  for (auto& s : c.to_strings()) arr.push_back(s);
  return arr;
}

HbarPoly hbar_poly_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("'coeff' must be an array of rational strings");
  std::vector<std::string> v;
  for (auto& x : j) {
    if (!x.is_string()) throw ValidationError("coefficients must be strings like \"num/den\"");
    v.push_back(x.get<std::string>());
  }
  if (!v.empty() && parse_rational(v.back()) == 0) throw ValidationError("trailing zero hbar coefficient");
  return HbarPoly::from_strings(v);
}

Json to_json(const AlgebraElement& a) {
  Json j;
  j["N"] = a.N();
  Json terms = Json::array();
  for (auto& [m, c] : a.sorted_terms()) terms.push_back({{"mono", mono_json(*a.order(), m)}, {"coeff", to_json(c)}});
  j["terms"] = terms;
  return j;
}

AlgebraElement algebra_from_json(const Json& j, OrderPtr o) {
  check_N(j, o);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ValidationError("'terms' must be an array");
  AlgebraElement a(o);
  for (auto& t : terms) {
    Monomial m = mono_from_json(field(t, "mono"), *o);
    if (a.terms().count(m)) throw ValidationError("duplicate monomial in JSON");
    HbarPoly c = hbar_poly_from_json(field(t, "coeff"));
    if (c.is_zero()) throw ValidationError("zero coefficient stored in JSON");
    a.add_term(m, c);
  }
  return a;
}

Json to_json(const ModuleElement& m) {
  Json j;
  j["N"] = m.N();
  j["t"] = m.t();
  std::vector<std::pair<ModKey, HbarPoly>> v(m.terms().begin(), m.terms().end());
  int t = m.t();
  std::sort(v.begin(), v.end(), [t](auto& a, auto& b) {
    int c = a.first.compare(0, t, b.first, 0, t);
    if (c != 0) return c < 0;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  Json terms = Json::array();
  for (auto& [k, c] : v)
    terms.push_back({{"mono", mono_json(*m.order(), m.mono(k))}, {"slots", m.slots(k)}, {"coeff", to_json(c)}});
  j["terms"] = terms;
  return j;
}

ModuleElement module_from_json(const Json& j, OrderPtr o) {
  check_N(j, o);
  int t = int_field(j, "t");
  if (t < 0) throw ValidationError("'t' must be non-negative");
  ModuleElement m(o, t);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ValidationError("'terms' must be an array");
  for (auto& x : terms) {
    Monomial mono = mono_from_json(field(x, "mono"), *o);
    const Json& s = field(x, "slots");
    if (!s.is_array() || static_cast<int>(s.size()) != t) throw ValidationError("'slots' must have t entries");
    std::vector<int> slots;
    for (auto& v : s) {
      if (!v.is_number_integer() || v.get<int>() < 1 || v.get<int>() > o->N()) throw ValidationError("bad slot index");
      slots.push_back(v.get<int>());
    }
    HbarPoly c = hbar_poly_from_json(field(x, "coeff"));
    if (c.is_zero()) throw ValidationError("zero coefficient stored in JSON");
    m.add_term(mono, slots, c);
  }
  return m;
}

Json to_json(const TGenerator& t) {
  Json j;
  j["pyramid"] = t.pyramid.spec();
  j["i"] = t.i;
  j["j"] = t.j;
  j["x"] = t.x;
  j["r"] = t.r;
  j["truncation"] = t.truncation;
  j["sign_convention"] = t.convention == SignConvention::IncludeTarget ? "include-target" : "literal";
  j["kazhdan_degree"] = t.kazhdan_degree == kNegInfDegree ? Json(nullptr) : Json(t.kazhdan_degree);
  j["order"] = t.value.order()->fingerprint();
  j["value"] = to_json(t.value);
  return j;
}

Json to_json(const JMatrix& J) {
  Json j;
  j["N"] = J.N;
  j["order"] = J.order->fingerprint();
  Json e = Json::array();
  for (auto& [pos, c] : J.entries)
    e.push_back({{"row", {pos.first.first, pos.first.second}},
                 {"col", {pos.second.first, pos.second.second}},
                 {"value", to_json(c)}});
  j["entries"] = e;
  return j;
}

JMatrix jmatrix_from_json(const Json& j, OrderPtr o) {
  JMatrix J;
  J.N = int_field(j, "N");
  J.order = o;
  if (J.N != o->N()) throw ValidationError("N in JSON does not match the ambient order");
  if (field(j, "order").get<std::string>() != o->fingerprint()) throw ValidationError("generator order fingerprint differs");
  for (auto& x : field(j, "entries")) {
    auto r = field(x, "row"), c = field(x, "col");
    if (!r.is_array() || r.size() != 2 || !c.is_array() || c.size() != 2) throw ValidationError("bad J position");
    J.entries[{{r[0].get<int>(), r[1].get<int>()}, {c[0].get<int>(), c[1].get<int>()}}] =
        algebra_from_json(field(x, "value"), o);
  }
  return J;
}

Json to_json(const SemiclassicalJ& s) {
  Json j;
  j["N"] = s.N;
  Json terms = Json::array();
  for (auto& [k, p] : s.entries) {
    Json poly = Json::array();
    for (auto& [e, c] : p) poly.push_back({{"x21", e.first}, {"x11", e.second}, {"coeff", rational_str(c)}});
    terms.push_back({{"first", {k.first.i, k.first.j}}, {"second", {k.second.i, k.second.j}}, {"poly", poly}});
  }
  j["terms"] = terms;
  return j;
}

Json to_json(const RMatrixElement& r) {
  Json terms = Json::array();
  for (auto& [k, c] : r.terms)
    terms.push_back({{"first", {k.first.i, k.first.j}}, {"second", {k.second.i, k.second.j}}, {"coeff", rational_str(c)}});
  return terms;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace walg
