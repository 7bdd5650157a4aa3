#include "helpers.hpp"
#include "walg/errors.hpp"
#include "walg/pyramid.hpp"

using namespace walg;
using namespace walg::test;

TEST_SUITE("algebra") {

TEST_CASE("hbar polynomials") {
  HbarPoly p = HbarPoly(2) + h(3);
  CHECK(p.degree() == 1);
  CHECK(p.coeff(1) == 3);
  CHECK((p - p).is_zero());
  CHECK(p.evaluate(Rational(1, 3)) == 3);
  CHECK_FALSE(p.divisible_by_hbar());
  CHECK(h(4).divided_by_hbar() == HbarPoly(4));
  CHECK_THROWS_AS(p.divided_by_hbar(), InternalError);
  CHECK(HbarPoly::from_strings(p.to_strings()) == p);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
}

TEST_CASE("an ordered word stays as it is") {
  auto o = GeneratorOrder::lexicographic(2);
  auto a = E(o, 1, 2) * E(o, 2, 1);
  CHECK(a == AlgebraElement::from_word(o, {{1, 2}, {2, 1}}));
  CHECK(a.size() == 1);
}

TEST_CASE("one rewrite step") {
  auto o = GeneratorOrder::lexicographic(2);
  auto lhs = E(o, 2, 1) * E(o, 1, 2);
  auto rhs = E(o, 1, 2) * E(o, 2, 1) + (E(o, 2, 2) - E(o, 1, 1)).scaled(h());
  CHECK(lhs == rhs);
}

TEST_CASE("unit law") {
  auto o = GeneratorOrder::lexicographic(4);
  std::mt19937_64 rng(1);
  auto one = AlgebraElement::one(o);
  for (int k = 0; k < 20; ++k) {
    auto a = random_element(o, rng);
    CHECK(one * a == a);
    CHECK(a * one == a);
  }
}

TEST_CASE("commutator") {
  auto o = GeneratorOrder::lexicographic(3);
  CHECK(commutator(E(o, 1, 2), E(o, 2, 1)) == E(o, 1, 1) - E(o, 2, 2));
  CHECK(commutator(E(o, 1, 1), E(o, 2, 3)).is_zero());
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    auto a = random_element(o, rng);
    CHECK(commutator(a, a).is_zero());
  }
}

TEST_CASE("mismatched orders are rejected") {
  auto a = GeneratorOrder::lexicographic(3);
  auto b = GeneratorOrder::from_sequence(3, {{3, 3}, {3, 2}, {3, 1}, {2, 3}, {2, 2}, {2, 1}, {1, 3}, {1, 2}, {1, 1}});
  CHECK_THROWS_AS(multiply(E(a, 1, 2), E(b, 2, 1)), StructuralError);
  CHECK_THROWS_AS(multiply(E(a, 1, 2), E(GeneratorOrder::lexicographic(2), 2, 1)), StructuralError);
  CHECK_THROWS_AS(GeneratorOrder::from_sequence(2, {{1, 1}, {1, 2}, {2, 1}}), ValidationError);
}

TEST_CASE("engine properties on random samples") {
  for (int N : {2, 3, 4}) {
    for (auto& r : engine_health(N, 60, 100 + N)) {
      INFO(r.name, " ", r.first_failure);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("order change round trip") {
  std::mt19937_64 rng(7);
  auto lex = GeneratorOrder::lexicographic(3);
  for (int k = 0; k < 20; ++k) {
    auto o2 = random_order(3, rng);
    auto a = random_element(lex, rng);
    CHECK(a.convert(o2).convert(lex) == a);
  }
}

TEST_CASE("Kazhdan degree") {
  auto p = Pyramid::from_heights({1, 3, 2, 1});
  auto o = canonical_order(p);
  CHECK(kazhdan_degree(E(o, 1, 4), p) == 2);
  CHECK(kazhdan_degree(scalar(o, h()), p) == 1);
  CHECK(kazhdan_degree(E(o, 2, 3), p) == 1);  // same column
  CHECK(kazhdan_degree(AlgebraElement(o), p) == kNegInfDegree);
}

TEST_CASE("Kazhdan degree is additive on monomial pairs") {
  auto p = Pyramid::from_heights({1, 3, 2, 1});
  auto o = canonical_order(p);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    auto a = random_element(o, rng, 1, 2);
    auto b = random_element(o, rng, 1, 2);
    int da = kazhdan_degree(a, p), db = kazhdan_degree(b, p);
    CHECK(kazhdan_degree(a * b, p) == da + db);
  }
  for (int k = 0; k < 100; ++k) {
    auto a = random_element(o, rng), b = random_element(o, rng);
    auto ab = a * b;
    if (ab.is_zero()) continue;
    CHECK(kazhdan_degree(ab, p) <= kazhdan_degree(a, p) + kazhdan_degree(b, p));
  }
}

TEST_CASE("rendering") {
  auto o = GeneratorOrder::lexicographic(2);
  auto a = E(o, 2, 1) * E(o, 2, 1) * E(o, 1, 2);
  CHECK(monomial_to_string(*o, a.sorted_terms().back().first) == "E12*E21^2");
}

}
