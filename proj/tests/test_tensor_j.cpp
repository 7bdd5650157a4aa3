#include "helpers.hpp"
#include "walg/report.hpp"
#include "walg/pipelines.hpp"
#include "walg/tensor_j.hpp"

using namespace walg;
using namespace walg::test;

namespace {

const JComputation& cached_J(int N) {
  static std::map<int, JComputation> memo;
  auto it = memo.find(N);
  if (it == memo.end()) it = memo.emplace(N, compute_J(N)).first;
  return it->second;
}

}  // namespace

TEST_SUITE("tensor_j") {

TEST_CASE("J is unipotent, divisible by hbar and valued in U(l)") {
  for (int N = 2; N <= 5; ++N) {
    const auto& C = cached_J(N);
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto s = check_J_structure(C.J, Q);
    INFO(N, " ", s.witness);
    CHECK(s.ok());
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) CHECK(C.J.entry({i, j}, {i, j}) == AlgebraElement::one(Q.order()));
  }
  for (auto& [pos, c] : cached_J(3).J.entries) CHECK(pos.first.second > pos.second.second);
}

TEST_CASE("pair generators recover the fused vectors") {
  for (int N = 3; N <= 4; ++N) {
    const auto& C = cached_J(N);
    WhittakerQuotient Q(Pyramid::subregular(N));
    for (auto& [ij, F] : C.fused) {
      ModuleElement sum = C.pairs.at(ij);
      for (auto& [pos, c] : C.J.entries)
        if (pos.second == ij) sum += Q.right_act(C.pairs.at(pos.first), c);
      CHECK(sum == F);
    }
    for (auto& [ij, G] : C.pairs) CHECK(Q.is_whittaker(G).ok);
  }
}

TEST_CASE("serial and parallel J agree") {
  JOptions serial;
  serial.parallel = false;
  auto a = compute_J(4, serial);
  const auto& b = cached_J(4);
  CHECK(a.J.entries.size() == b.J.entries.size());
  for (auto& [pos, c] : b.J.entries) CHECK(a.J.entry(pos.first, pos.second) == c);
}

TEST_CASE("semiclassical limit for N = 3 is j_c") {
  auto s = semiclassical_limit(cached_J(3).J);
  CHECK(s == from_rmatrix(3, jc_closed_form(3)));
  CHECK(semiclassical_closed_form(3, DynamicalConvention::Statement) == s);
  CHECK(semiclassical_closed_form(3, DynamicalConvention::Proof) == s);
  auto c = compare_semiclassical(s);
  CHECK(c.constant_matches_jc);
  CHECK(c.diff_statement.empty());
  CHECK(c.diff_proof.empty());
}

TEST_CASE("closed forms at N = 4") {
  auto st = semiclassical_closed_form(4, DynamicalConvention::Statement).dynamical_part();
  CHECK(st.entries.at({{1, 2}, {4, 2}}) == XPoly{{{1, 0}, 1}});
  CHECK(st.entries.at({{1, 2}, {4, 1}}) == XPoly{{{0, 1}, 1}});
  CHECK(st.entries.size() == 2);
  auto pr = semiclassical_closed_form(4, DynamicalConvention::Proof).dynamical_part();
  CHECK(pr.entries.at({{1, 2}, {4, 1}}) == XPoly{{{0, 2}, 1}});
  CHECK(pr.entries.at({{1, 3}, {4, 1}}) == XPoly{{{0, 1}, -1}});
}

TEST_CASE("x-degree bound") {
  for (int N = 3; N <= 7; ++N) CHECK(semiclassical_closed_form(N).max_x_degree() <= N - 3);
  for (int N = 3; N <= 5; ++N) CHECK(semiclassical_limit(cached_J(N).J).max_x_degree() <= N - 3);
}

TEST_CASE("computed limit: constant part and the dynamical family") {
  for (int N = 3; N <= 5; ++N) {
    auto s = semiclassical_limit(cached_J(N).J);
    auto c = compare_semiclassical(s);
    CHECK(c.constant_matches_jc);
    CHECK(c.statement_up_to_sign);
  }
  auto s4 = semiclassical_limit(cached_J(4).J);
  CHECK(s4.entries.at({{1, 2}, {4, 1}}) == XPoly{{{0, 1}, 1}});
  CHECK(compare_semiclassical(s4).matched() == "statement");
}

TEST_CASE("only the asymptotic parts contribute at first order") {
  for (int N = 3; N <= 5; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    const auto& C = cached_J(N);
    CHECK(semiclassical_from_asymptotic_parts(Q, C.basis) == semiclassical_limit(C.J));
  }
}

TEST_CASE("fusion is associative on canonical triples") {
  auto f3 = fuse_power_J(3, {{1, 2, 3}, {2, 1, 1}, {3, 3, 1}, {1, 1, 1}});
  CHECK(f3.failures == 0);
  CHECK(f3.checked == 4);
}

TEST_CASE("golden J(3)") {
  auto rep = load_report(std::string(WALG_FIXTURES) + "/J3.json");
  auto now = run_compute_j(3, true, true);
  CHECK(rep.order_fingerprint == now.order_fingerprint);
  CHECK(dump(rep.to_json(false)) == dump(now.to_json(false)));
  WhittakerQuotient Q(Pyramid::subregular(3));
  auto J = jmatrix_from_json(rep.data["J"], Q.order());
  for (auto& [pos, c] : cached_J(3).J.entries) CHECK(J.entry(pos.first, pos.second) == c);
}

}
