// One line per acceptance criterion. Exit status is 0 when every criterion ends as pinned below:
// criteria that disagree with a displayed formula are pinned as expected failures, and an
// unexpected pass of one of those is reported as an error too.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "walg/geometry.hpp"
#include "walg/health.hpp"
#include "walg/parallel.hpp"
#include "walg/tensor_j.hpp"
#include "walg/whittaker.hpp"

using namespace walg;

namespace {

// tolerances: all comparisons are exact (zero tolerance); runtime budgets in milliseconds
constexpr double kBudgetWhittakerSmall = 60e3;   // N <= 5
constexpr double kBudgetWhittakerN6 = 600e3;     // N = 6
constexpr double kBudgetOmega = 1e3;             // N = 3..8 together
constexpr double kBudgetSemiclassicalN5 = 300e3;
constexpr int kHealthCases = 1000;
constexpr int kFusionTriples = 10;

// criteria whose displayed formulas disagree with the computation
const std::set<int> kExpectedFail = {2, 4, 5, 8};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

std::string fmt_ms(double ms) {
  char b[32];
  std::snprintf(b, sizeof b, "%.0f ms", ms);
  return b;
}

std::map<int, JComputation> J_cache;
std::map<int, double> J_ms;
const JComputation& J_of(int N) {
  auto it = J_cache.find(N);
  if (it == J_cache.end()) {
    double t0 = now_ms();
    it = J_cache.emplace(N, compute_J(N)).first;
    J_ms[N] = now_ms() - t0;
  }
  return it->second;
}

Outcome whittaker_vectors() {
  Outcome o;
  bool ok = true;
  std::string d;
  for (int N = 2; N <= 6; ++N) {
    double t0 = now_ms();
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto res = resolve_t12_exponent(Q);
    int checks = 0;
    bool all = true;
    for (int i = 1; i <= N; ++i) {
      auto w = is_whittaker_parallel(Q, tilde_v_unchecked(Q, N - i, res.chosen));
      checks += w.checked;
      if (!w.ok) {
        all = false;
        d += " v~_" + std::to_string(i) + " fails at " + w.witness->to_string() + ";";
      }
    }
    double ms = now_ms() - t0;
    bool in_time = ms <= (N <= 5 ? kBudgetWhittakerSmall : kBudgetWhittakerN6);
    ok = ok && all && in_time;
    d += " N=" + std::to_string(N) + ": " + std::to_string(checks) + " checks, T12 exponent " + to_string(res.chosen) +
         (res.long_ok ? "" : " (N-i-1 not Whittaker)") + ", " + fmt_ms(ms) + (in_time ? "" : " over budget") + ";";
  }
  o.pass = ok;
  o.detail = d;
  return o;
}

Outcome generator_identities() {
  std::vector<Pyramid> ps;
  for (int N = 2; N <= 6; ++N) ps.push_back(Pyramid::subregular(N));
  ps.push_back(Pyramid::from_heights({1, 3, 2, 1}));
  Outcome o;
  std::string d;
  bool some_convention = false;
  for (auto conv : {SignConvention::IncludeTarget, SignConvention::Literal}) {
    int total = 0, match = 0;
    for (auto& p : ps)
      for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= p.n(); ++j)
          for (int x = 0; x <= p.n(); ++x) {
            ++total;
            // the displayed degree-one sum has no sigma weight
            match += t_element(p, i, j, x, 1, conv).value == t1_closed_form(p, i, j, x, SignConvention::Literal);
          }
    bool t11 = true, t21 = true;
    for (int N = 3; N <= 6; ++N) {
      auto p = Pyramid::subregular(N);
      auto og = canonical_order(p);
      t11 &= t_element(p, 1, 1, 0, 1, conv).value ==
             AlgebraElement::gen(og, 1, 1) - AlgebraElement::scalar(og, HbarPoly::monomial(N - 2, 1));
      t21 &= t_element(p, 2, 1, 1, 1, conv).value == -AlgebraElement::gen(og, 2, 1);
    }
    bool all = match == total && t11 && t21;
    some_convention |= all;
    d += std::string(conv == SignConvention::IncludeTarget ? " include-target" : " literal") + ": degree-one sum " +
         std::to_string(match) + "/" + std::to_string(total) + ", T11;0 " + (t11 ? "ok" : "differs") + ", T21;1=-E21 " +
         (t21 ? "ok" : "differs") + ";";
  }
  if (!some_convention) d += " no sign convention meets both quotes (include-target matches the sum times sigma_j)";
  o.pass = some_convention;
  o.detail = d;
  return o;
}

Outcome recursion_suite() {
  Outcome o;
  o.pass = true;
  for (int N = 4; N <= 6; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto rc = check_t_recursion(Q);
    o.pass &= rc.ok();
    o.detail += " N=" + std::to_string(N) + ": " + std::to_string(rc.checked) + " (i,r) pairs" +
                (rc.ok() ? "" : ", failing " + rc.failed.front()) + ";";
  }
  return o;
}

Outcome l_constant_divisibility() {
  Outcome o;
  // counts by column index j of T_{ij}
  int n[3] = {0, 0, 0}, bad[3] = {0, 0, 0};
  std::string first;
  auto test = [&](const WhittakerQuotient& Q, const AlgebraElement& t, int j, const std::string& tag) {
    ++n[j];
    if (!l_constant_part(t, Q).divisible_by_hbar()) {
      if (bad[1] + bad[2] == 0) first = tag;
      ++bad[j];
    }
  };
  for (int N = 2; N <= 6; ++N) {
    auto p = Pyramid::subregular(N);
    WhittakerQuotient Q(p);
    auto oq = Q.order();
    auto nm = [&](std::string s) { return "N=" + std::to_string(N) + " " + s; };
    // Whittaker vector coefficients
    for (int j = 1; j <= N - 1; ++j)
      for (int i = 0; i < j && i + 1 < p.columns(); ++i) test(Q, truncated_t(p, i + 1, 2, 2, 1, j - i, oq).value, 2, nm("T22"));
    for (int i = 0; i <= N - 3 && i + 1 < p.columns(); ++i)
      for (auto e : {T12Exponent::Short, T12Exponent::Long})
        test(Q, truncated_t(p, i + 1, 1, 2, 1, t12_degree(e, N, i), oq).value, 2, nm("T12"));
    // degree-one generators
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int x = 0; x <= 2; ++x)
          test(Q, t_element(p, i, j, x, 1).value, j,
               nm("T" + std::to_string(i) + std::to_string(j) + ";" + std::to_string(x) + "^(1)"));
    // recursion
    if (N >= 4)
      for (int k = 1; k <= 2; ++k)
        for (int i = 1; i <= 2; ++i)
          for (int r = 1; r <= N - 1; ++r) test(Q, truncated_t(p, k, i, 2, 1, r, oq).value, 2, nm("recursion"));
  }
  o.pass = bad[1] + bad[2] == 0;
  o.detail = " T_{i2}: " + std::to_string(n[2] - bad[2]) + "/" + std::to_string(n[2]) + " divisible; T_{i1}: " +
             std::to_string(n[1] - bad[1]) + "/" + std::to_string(n[1]) + " divisible" +
             (o.pass ? "" : "; first failure " + first + " (an element of U(l) itself)");
  return o;
}

Outcome asymptotic_forms() {
  Outcome o;
  o.pass = true;
  int lin = 0, lin_n = 0, t22 = 0, t22_alt = 0, t22_n = 0, t12p = 0, t12t = 0, t12_alt = 0, t12_n = 0;
  for (int N = 3; N <= 6; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto c = check_asymptotic_forms(Q);
    o.pass &= c.displayed_all();
    lin += c.linear_literal, lin_n += c.linear_checked;
    t22 += c.t22_displayed, t22_alt += c.t22_alt_sign, t22_n += c.t22_checked;
    t12p += c.t12_long_displayed, t12t += c.t12_short_displayed, t12_alt += c.t12_short_alt_sign, t12_n += c.t12_checked;
  }
  auto frac = [](int a, int b) { return std::to_string(a) + "/" + std::to_string(b); };
  o.detail = " linear part " + frac(lin, lin_n) + " as displayed (the rest differ by sigma_j);" + " T22 l-linear " +
             frac(t22, t22_n) + " as displayed, " + frac(t22_alt, t22_n) + " with sign (-1)^{d+1};" +
             " T12 l-linear: superscript N-i-1 " + frac(t12p, t12_n) + ", N-i-2 " + frac(t12t, t12_n) + " as displayed, " +
             frac(t12_alt, t12_n) + " at N-i-2 with sign (-1)^{d+1};";
  return o;
}

Outcome wonderbolic() {
  Outcome o;
  double t0 = now_ms();
  bool ok = true;
  std::string printed;
  for (int N = 3; N <= 8; ++N) {
    auto r = verify_inverse(N);
    if (!r.ok()) {
      ok = false;
      o.detail += " N=" + std::to_string(N) + " fails: " + r.diff + ";";
    }
    if (!verify_inverse(N, RecursionSign::AsPrinted).recursive_equals_closed) printed += " " + std::to_string(N);
  }
  double ms = now_ms() - t0;
  o.pass = ok && ms <= kBudgetOmega;
  o.detail += " N=3..8 nondegenerate, isotropic, recursion = closed form, inverse ok, " + fmt_ms(ms) + ";";
  if (!printed.empty()) o.detail += " recursion read with the displayed minus sign differs at N =" + printed + ";";
  return o;
}

Outcome j_structure() {
  Outcome o;
  o.pass = true;
  for (int N = 3; N <= 5; ++N) {
    double t0 = now_ms();
    const auto& C = J_of(N);
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto s = check_J_structure(C.J, Q);
    o.pass &= s.ok();
    o.detail += " N=" + std::to_string(N) + ": " + std::to_string(C.J.entries.size()) + " off-identity entries" +
                (s.ok() ? "" : ", " + s.witness) + ", " + fmt_ms(now_ms() - t0) + ";";
  }
  return o;
}

Outcome semiclassical() {
  Outcome o;
  o.pass = true;
  for (int N = 3; N <= 5; ++N) {
    double t0 = now_ms();
    auto s = semiclassical_limit(J_of(N).J);
    auto c = compare_semiclassical(s);
    // includes building J, which criterion 7 may already have done
    double ms = now_ms() - t0 + J_ms[N];
    if (N == 3) {
      bool eq = s == from_rmatrix(3, jc_closed_form(3));
      o.pass &= eq;
      o.detail += std::string(" N=3: limit ") + (eq ? "= j_c" : "differs from j_c") + ";";
      continue;
    }
    bool ok = c.constant_matches_jc && (c.matches_statement || c.matches_proof);
    if (N == 5) ok = ok && ms <= kBudgetSemiclassicalN5;
    o.pass &= ok;
    o.detail += " N=" + std::to_string(N) + ": constant part " + (c.constant_matches_jc ? "= j_c" : "differs") +
                ", dynamical part matches " + c.matched();
    if (c.matched() == "neither")
      o.detail += std::string(" (statement exponents ") + (c.statement_up_to_sign ? "match up to sign" : "differ") +
                  "; " + c.diff_statement.front() + ")";
    if (N == 5) o.detail += ", " + fmt_ms(ms);
    o.detail += ";";
  }
  return o;
}

Outcome fusion() {
  Outcome o;
  o.pass = true;
  std::mt19937_64 rng(2024);
  for (int N = 3; N <= 4; ++N) {
    std::uniform_int_distribution<int> d(1, N);
    std::vector<std::array<int, 3>> tr;
    for (int k = 0; k < kFusionTriples; ++k) tr.push_back({d(rng), d(rng), d(rng)});
    auto f = fuse_power_J(N, tr);
    o.pass &= f.failures == 0 && f.checked == kFusionTriples;
    o.detail += " N=" + std::to_string(N) + ": " + std::to_string(f.checked - f.failures) + "/" +
                std::to_string(f.checked) + " triples;";
  }
  return o;
}

Outcome engine() {
  Outcome o;
  o.pass = true;
  for (auto& h : engine_health(4, kHealthCases, 0xacce55)) {
    o.pass &= h.ok() && h.cases == kHealthCases;
    o.detail += " " + h.name + " " + std::to_string(h.cases - h.failures) + "/" + std::to_string(h.cases) + ";";
  }
  return o;
}

}  // namespace

int main() {
  configure_threads_from_env();
  std::vector<std::pair<std::string, std::function<Outcome()>>> crit = {
      {"Whittaker vectors, N=2..6", whittaker_vectors},
      {"degree-one generator identities", generator_identities},
      {"T recursion and ad E_{N,N-1}, N=4..6", recursion_suite},
      {"l-constant parts divisible by hbar", l_constant_divisibility},
      {"asymptotic parts closed forms, N=3..6", asymptotic_forms},
      {"wonderbolic inversion, N=3..8", wonderbolic},
      {"J structure, N=3..5", j_structure},
      {"semiclassical limit, N=3..5", semiclassical},
      {"fusion associativity, N=3,4", fusion},
      {"engine health, N=4", engine},
  };
  int unexpected = 0;
  for (std::size_t k = 0; k < crit.size(); ++k) {
    int id = static_cast<int>(k) + 1;
    double t0 = now_ms();
    Outcome o;
    try {
      o = crit[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string(" exception: ") + e.what();
    }
    bool expected_fail = kExpectedFail.count(id) != 0;
    const char* tag = o.pass ? (expected_fail ? "PASS (pinned as failing: update the ledger)" : "PASS")
                             : (expected_fail ? "FAIL (recorded discrepancy)" : "FAIL");
    if (o.pass == expected_fail) ++unexpected;
    std::printf("criterion %2d %s: %s ::%s [%s]\n", id, tag, crit[k].first.c_str(), o.detail.c_str(),
                fmt_ms(now_ms() - t0).c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d criteria, %d outcome(s) differ from the pinned expectation\n",
              static_cast<int>(crit.size()), unexpected);
  return unexpected == 0 ? 0 : 1;
}
