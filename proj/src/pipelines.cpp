#include "walg/pipelines.hpp"

#include <chrono>
#include <random>

#include "walg/errors.hpp"
#include "walg/geometry.hpp"
#include "walg/health.hpp"
#include "walg/parallel.hpp"
#include "walg/tensor_j.hpp"
#include "walg/whittaker.hpp"

namespace walg {

namespace {

class Stopwatch {
 public:
  double ms() {
    auto now = std::chrono::steady_clock::now();
    double d = std::chrono::duration<double, std::milli>(now - t_).count();
    t_ = now;
    return d;
  }

 private:
  std::chrono::steady_clock::time_point t_ = std::chrono::steady_clock::now();
};

std::string join(const std::vector<std::string>& v, std::size_t limit = 4) {
  std::string s;
  for (std::size_t k = 0; k < v.size() && k < limit; ++k) s += (k ? "; " : "") + v[k];
  if (v.size() > limit) s += "; ... (" + std::to_string(v.size()) + " total)";
  return s;
}

VerificationReport header(const std::string& cmd, const Pyramid& p) {
  VerificationReport r;
  r.command = cmd;
  r.N = p.N();
  r.pyramid = p.spec();
  r.order_fingerprint = canonical_order(p)->fingerprint();
  r.data = Json::object();
  return r;
}

std::string whittaker_witness(const WhittakerCheck& w) {
  if (w.ok) return std::to_string(w.checked) + " m-generators";
  return "fails at " + w.witness->to_string() + ": " + w.residue.to_string();
}

bool in_p(const AlgebraElement& a, const Pyramid& p) {
  auto sub = subalgebras(p);
  std::vector<bool> ok(a.order()->size(), false);
  for (auto g : sub.p) ok[a.order()->rank(g)] = true;
  for (auto& [m, c] : a.terms())
    for (char ch : m)
      if (!ok[static_cast<Rank>(ch)]) return false;
  return true;
}

}  // namespace

VerificationReport run_compute_t(const ComputeTArgs& a) {
  Pyramid p = Pyramid::parse(a.pyramid);
  VerificationReport rep = header("compute-T", p);
  Stopwatch sw;
  TGenerator t = truncated_t(p, a.truncate, a.i, a.j, a.x, a.r, canonical_order(p), a.convention);
  double ms = sw.ms();
  bool deg_ok = t.kazhdan_degree <= a.r;
  rep.add("kazhdan-degree", deg_ok,
          t.kazhdan_degree == kNegInfDegree ? "zero element" : "degree " + std::to_string(t.kazhdan_degree), ms);
  rep.add("in-U(p)", in_p(t.value, p));
  if (a.r == 1 && a.truncate == 0) {
    AlgebraElement cf = t1_closed_form(p, a.i, a.j, a.x, a.convention);
    rep.compare("degree-one-closed-form", cf == t.value, cf == t.value ? "" : "closed form " + cf.to_string(), sw.ms());
  }
  rep.data["T"] = to_json(t);
  rep.data["rendered"] = t.value.to_string();
  return rep;
}

VerificationReport run_verify_whittaker(int N, bool canonical) {
  if (N < 2 || N > kMaxN) throw ValidationError("N must lie in 2.." + std::to_string(kMaxN));
  Pyramid p = Pyramid::subregular(N);
  VerificationReport rep = header("verify-whittaker", p);
  WhittakerQuotient Q(p);
  Stopwatch sw;
  ExponentResolution res = resolve_t12_exponent(Q);
  rep.add("t12-exponent-resolved", res.short_ok || res.long_ok,
          std::string("chosen ") + to_string(res.chosen) + (res.witness.empty() ? "" : "; rejected: " + res.witness), sw.ms());
  rep.data["t12_exponent"] = {{"N-i-2", res.short_ok}, {"N-i-1", res.long_ok}, {"chosen", to_string(res.chosen)}};
  Json vecs = Json::array();
  WhittakerBasis tilde;
  tilde.N = N;
  tilde.exponent = res.chosen;
  for (int i = 1; i <= N; ++i) {
    ModuleElement v = tilde_v_unchecked(Q, N - i, res.chosen);
    WhittakerCheck w = is_whittaker_parallel(Q, v);
    rep.add("v~_" + std::to_string(i) + " whittaker", w.ok, whittaker_witness(w), sw.ms());
    vecs.push_back(to_json(v));
    tilde.vectors.push_back(std::move(v));
  }
  rep.data["tilde"] = vecs;
  if (canonical) {
    WhittakerBasis B;
    try {
      B = canonicalize(Q, tilde);
      rep.add("canonicalize", true, "", sw.ms());
    } catch (const InternalError& e) {
      rep.add("canonicalize", false, e.what(), sw.ms());
      return rep;
    }
    Json cv = Json::array();
    for (int i = 1; i <= N; ++i) {
      WhittakerCheck w = is_whittaker_parallel(Q, B[i]);
      rep.add("v_" + std::to_string(i) + " whittaker", w.ok, whittaker_witness(w), sw.ms());
      rep.add("v_" + std::to_string(i) + " canonical form", is_canonical_vector(Q, B[i], i));
      std::string bad;
      for (int j = i + 1; j <= N; ++j)
        if (!in_truncated_borel_ideal(B[i].coefficient({j}), j - 1)) bad += " x_" + std::to_string(i) + "^" + std::to_string(j);
      rep.add("v_" + std::to_string(i) + " refined support", bad.empty(), bad, sw.ms());
      cv.push_back(to_json(B[i]));
    }
    rep.data["canonical"] = cv;
  }
  return rep;
}

VerificationReport run_compute_j(int N, bool semiclassical, bool compare) {
  if (N < 2 || N > kMaxN) throw ValidationError("N must lie in 2.." + std::to_string(kMaxN));
  Pyramid p = Pyramid::subregular(N);
  VerificationReport rep = header("compute-J", p);
  WhittakerQuotient Q(p);
  Stopwatch sw;
  JComputation C;
  try {
    C = compute_J(N);
    rep.add("pair-generators", true, "whittaker and canonical", sw.ms());
  } catch (const InternalError& e) {
    rep.add("pair-generators", false, e.what(), sw.ms());
    return rep;
  }
  JStructure st = check_J_structure(C.J, Q);
  rep.add("J-structure", st.ok(), st.witness, sw.ms());
  rep.data["J"] = to_json(C.J);
  if (!semiclassical && !compare) return rep;
  SemiclassicalJ s = semiclassical_limit(C.J);
  SemiclassicalJ s2 = semiclassical_from_asymptotic_parts(Q, C.basis);
  rep.add("limit-from-asymptotic-parts", s == s2, join(diff_semiclassical(s, s2)), sw.ms());
  rep.data["semiclassical"] = to_json(s);
  rep.data["semiclassical_rendered"] = s.to_string();
  if (!compare) return rep;
  SemiclassicalComparison cmp = compare_semiclassical(s);
  rep.compare("constant-part = j_c", cmp.constant_matches_jc);
  if (N == 3) {
    auto d = diff_semiclassical(s, from_rmatrix(N, jc_closed_form(N)));
    rep.compare("limit = j_c", d.empty(), join(d));
  }
  bool dyn = cmp.matches_statement || cmp.matches_proof;
  std::string w = "matched " + cmp.matched();
  if (!dyn) w += "; statement diff: " + join(cmp.diff_statement) + "; proof diff: " + join(cmp.diff_proof);
  rep.compare("dynamical-part convention", dyn, w, sw.ms());
  rep.data["comparison"] = {{"matched", cmp.matched()},
                            {"statement_up_to_sign", cmp.statement_up_to_sign},
                            {"proof_up_to_sign", cmp.proof_up_to_sign},
                            {"diff_statement", cmp.diff_statement},
                            {"diff_proof", cmp.diff_proof}};
  return rep;
}

VerificationReport run_check_omega(int N) {
  if (N < 3 || N > kMaxN) throw ValidationError("N must lie in 3.." + std::to_string(kMaxN));
  VerificationReport rep = header("check-omega", Pyramid::subregular(N));
  Stopwatch sw;
  InverseReport ir = verify_inverse(N, RecursionSign::Derived);
  double ms = sw.ms();
  rep.add("omega nondegenerate", ir.nondegenerate, "det " + rational_str(ir.det), ms);
  rep.add("m isotropic", ir.m_isotropic);
  rep.add("b isotropic", ir.b_isotropic);
  rep.add("jc recursive = closed form", ir.recursive_equals_closed, ir.diff);
  rep.add("(j_c - j_c^21) inverts omega", ir.inverse_ok, ir.diff);
  rep.add("r antisymmetric", ir.antisymmetric);
  rep.add("e outside w", ir.e_outside_w);
  InverseReport printed = verify_inverse(N, RecursionSign::AsPrinted);
  rep.compare("recursion with the displayed sign", printed.ok(), printed.diff, sw.ms());
  rep.data["det"] = rational_str(ir.det);
  rep.data["jc"] = to_json(jc_closed_form(N));
  return rep;
}

VerificationReport run_selftest(int N) {
  if (N < 2 || N > 8) throw ValidationError("selftest supports N in 2..8");
  Pyramid p = Pyramid::subregular(N);
  VerificationReport rep = header("selftest", p);
  Stopwatch sw;
  for (auto& h : engine_health(N, 200, 0x5eed + N)) rep.add("engine " + h.name, h.ok(), h.first_failure, sw.ms());

  std::string bad;
  int n = 0;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = 1; j <= p.n(); ++j)
      for (int x = 0; x <= p.n(); ++x) {
        ++n;
        if (!(t_element(p, i, j, x, 1).value == t1_closed_form(p, i, j, x))) bad += " (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(x) + ")";
      }
  rep.add("T^(1) closed form", bad.empty(), bad.empty() ? std::to_string(n) + " cases" : bad, sw.ms());

  for (auto& c : run_verify_whittaker(N, true).checks) rep.checks.push_back(c);
  if (N >= 3)
    for (auto& c : run_check_omega(N).checks)
      if (c.kind == "structural") rep.checks.push_back(c);
  if (N <= 5)
    for (auto& c : run_compute_j(N, true, false).checks) rep.checks.push_back(c);
  if (N >= 3 && N <= 4) {
    std::mt19937_64 rng(N);
    std::uniform_int_distribution<int> d(1, N);
    std::vector<std::array<int, 3>> triples;
    for (int k = 0; k < 4; ++k) triples.push_back({d(rng), d(rng), d(rng)});
    auto f = fuse_power_J(N, triples);
    rep.add("fusion associativity", f.failures == 0, join(f.failed), sw.ms());
  }
  return rep;
}

}  // namespace walg
