#include "helpers.hpp"
#include "walg/errors.hpp"
#include "walg/whittaker.hpp"

using namespace walg;
using namespace walg::test;

TEST_SUITE("whittaker") {

TEST_CASE("small instances of the vectors") {
  for (int N = 2; N <= 5; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    CHECK(build_tilde_v(Q, 0) == one_v(Q, {N}));
  }
  auto p = Pyramid::subregular(3);
  WhittakerQuotient Q(p);
  auto o = Q.order();
  auto T22 = truncated_t(p, 1, 2, 2, 1, 1, o).value;
  CHECK(build_tilde_v(Q, 1) == one_v(Q, {2}) - vec(Q, T22, {3}));
  // the T12 family at i = 0 carries (-1)^{N-i-2} = -1
  auto T12 = truncated_t(p, 1, 1, 2, 1, 1, o).value;
  CHECK(build_tilde_v(Q, 2) == one_v(Q, {1}) - vec(Q, T12, {3}));
  CHECK_FALSE(Q.is_whittaker(one_v(Q, {1}) + vec(Q, T12, {3})).ok);
}

TEST_CASE("exponent of the T12 family") {
  for (int N = 3; N <= 5; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto r = resolve_t12_exponent(Q);
    CHECK(r.short_ok);
    CHECK_FALSE(r.long_ok);
    CHECK(r.chosen == T12Exponent::Short);
    CHECK_THROWS_AS(build_tilde_v(Q, N - 1, T12Exponent::Long), InternalError);
  }
}

TEST_CASE("all vectors are Whittaker") {
  for (int N = 2; N <= 5; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto T = build_tilde_basis(Q);
    auto B = canonicalize(Q, T);
    for (int i = 1; i <= N; ++i) {
      CHECK(Q.is_whittaker(T[i]).ok);
      CHECK(Q.is_whittaker(B[i]).ok);
      CHECK(is_canonical_vector(Q, B[i], i));
      CHECK(B[i].coefficient({i}) == AlgebraElement::one(Q.order()));
      for (int j = 1; j < i; ++j) CHECK(B[i].coefficient({j}).is_zero());
    }
  }
}

TEST_CASE("l-constant and asymptotic parts") {
  WhittakerQuotient Q(Pyramid::subregular(4));
  auto o = Q.order();
  CHECK(l_constant_part(E(o, 2, 1) * E(o, 1, 1) + E(o, 1, 2), Q) == E(o, 2, 1) * E(o, 1, 1));
  CHECK(l_constant_part(scalar(o, h()), Q) == scalar(o, h()));
  auto a = asymptotic_parts(E(o, 1, 2).scaled(h()), Q);
  CHECK(a.linear.is_zero());
  CHECK(a.l_linear.is_zero());
  auto b = asymptotic_parts(E(o, 1, 3) + E(o, 1, 2) * E(o, 2, 1) * E(o, 1, 1) + E(o, 1, 2) * E(o, 1, 3), Q);
  CHECK(b.linear == E(o, 1, 3));
  CHECK(b.l_linear == E(o, 1, 2) * E(o, 2, 1) * E(o, 1, 1));
}

TEST_CASE("N = 2 needs no correction") {
  WhittakerQuotient Q(Pyramid::subregular(2));
  CHECK(Q.m_basis().empty());
  auto B = canonicalize(Q, build_tilde_basis(Q));
  CHECK(B[2] == one_v(Q, {2}));
  CHECK(l_constant_part(B[1].coefficient({2}), Q).is_zero());
}

TEST_CASE("canonicalize is idempotent and triangular") {
  for (int N = 3; N <= 5; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto T = build_tilde_basis(Q);
    auto B = canonicalize(Q, T);
    auto C = canonicalize(Q, B);
    for (int i = 1; i <= N; ++i) CHECK(C[i] == B[i]);
    CHECK(C.corrections.empty());
    for (auto& [ik, c] : B.corrections) {
      CHECK(ik.second > ik.first);
      CHECK(l_constant_part(c, Q) == c);
    }
    // v~_i = v_i + sum_k v_k c_i^k reproduces the tilde basis
    for (int i = 1; i <= N; ++i) {
      ModuleElement r = B[i];
      for (auto& [ik, c] : B.corrections)
        if (ik.first == i) r += Q.right_act(B[ik.second], c);
      CHECK(r == T[i]);
    }
  }
}

TEST_CASE("canonical form is unique") {
  WhittakerQuotient Q(Pyramid::subregular(4));
  auto o = Q.order();
  auto B = canonicalize(Q, build_tilde_basis(Q));
  std::vector<AlgebraElement> cs{AlgebraElement::one(o), E(o, 2, 1), E(o, 1, 1), E(o, 2, 1) * E(o, 1, 1) + scalar(o, h())};
  for (int i = 1; i <= 3; ++i)
    for (int k = i + 1; k <= 4; ++k)
      for (auto& c : cs) CHECK_FALSE(is_canonical_vector(Q, B[i] + Q.right_act(B[k], c), i));
}

TEST_CASE("canonicalization keeps the l-linear parts") {
  for (int N = 3; N <= 5; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto T = build_tilde_basis(Q);
    auto B = canonicalize(Q, T);
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        auto a = asymptotic_parts(T[i].coefficient({j}), Q);
        auto b = asymptotic_parts(B[i].coefficient({j}), Q);
        CHECK(a.l_linear == b.l_linear);
        CHECK(a.linear == b.linear);
      }
  }
}

TEST_CASE("refined support of the canonical coefficients") {
  for (int N = 3; N <= 5; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto B = canonicalize(Q, build_tilde_basis(Q));
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        auto x = B[i].coefficient({j});
        INFO(N, " x_", i, "^", j, " = ", x.to_string());
        CHECK(in_truncated_borel_ideal(x, j - 1));
        CHECK(in_truncated_borel_ideal(x, N - 1));
      }
  }
  auto o = GeneratorOrder::lexicographic(4);
  CHECK(in_truncated_borel_ideal(E(o, 1, 2) * E(o, 2, 1), 2));
  CHECK_FALSE(in_truncated_borel_ideal(E(o, 1, 3), 2));
  CHECK_FALSE(in_truncated_borel_ideal(E(o, 2, 1), 3));
}

TEST_CASE("displayed asymptotic forms") {
  // the l-linear parts carry (-1)^{d+1} where (-1)^r is displayed, and the T12 range fits superscript N-i-2
  for (int N = 3; N <= 5; ++N) {
    WhittakerQuotient Q(Pyramid::subregular(N));
    auto c = check_asymptotic_forms(Q);
    CHECK(c.t22_alt_sign == c.t22_checked);
    CHECK(c.t12_short_alt_sign == c.t12_checked);
  }
  auto o = canonical_order(Pyramid::subregular(4));
  CHECK(l_linear_t22_formula(3, o) == E(o, 1, 2) * E(o, 2, 1) * E(o, 1, 1) - E(o, 1, 3) * E(o, 2, 1));
  CHECK(l_linear_t12_formula(3, o) == E(o, 1, 2) * E(o, 1, 1));
}

TEST_CASE("non-subregular pyramids are rejected") {
  WhittakerQuotient Q(Pyramid::from_heights({1, 2, 1}));
  CHECK_THROWS_AS(build_tilde_v(Q, 0), UnsupportedError);
}

}
