#include "walg/health.hpp"

#include <algorithm>

#include "walg/errors.hpp"

namespace walg {

AlgebraElement random_element(OrderPtr o, std::mt19937_64& rng, int max_terms, int max_len) {
  int N = o->N();
  std::uniform_int_distribution<int> idx(1, N), nterms(1, max_terms), len(1, max_len), coef(-3, 3), hp(0, 1);
  AlgebraElement a(o);
  int t = nterms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<GenIdx> w(len(rng));
    for (auto& g : w) g = {idx(rng), idx(rng)};
    int c = coef(rng);
    if (c == 0) c = 1;
    a += AlgebraElement::from_word(o, w, HbarPoly::monomial(c, hp(rng)));
  }
  return a;
}

OrderPtr random_order(int N, std::mt19937_64& rng) {
  auto seq = GeneratorOrder::lexicographic(N)->sequence();
  std::shuffle(seq.begin(), seq.end(), rng);
  return GeneratorOrder::from_sequence(N, seq);
}

std::vector<HealthResult> engine_health(int N, int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto o = GeneratorOrder::lexicographic(N);
  HealthResult assoc, jacobi, div, change;
  assoc.name = "pbw-associativity";
  jacobi.name = "jacobi";
  div.name = "hbar-divisibility";
  change.name = "order-change";
  auto fail = [](HealthResult& h, const std::string& w) {
    if (h.failures++ == 0) h.first_failure = w;
  };
  for (int k = 0; k < cases; ++k) {
    AlgebraElement a = random_element(o, rng), b = random_element(o, rng), c = random_element(o, rng);

    ++assoc.cases;
    if (!((a * b) * c == a * (b * c))) fail(assoc, "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());

    ++div.cases;
    AlgebraElement d = a * b - b * a;
    if (!d.divisible_by_hbar()) fail(div, "a=" + a.to_string() + " b=" + b.to_string());

    ++jacobi.cases;
    try {
      AlgebraElement j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
      if (!j.is_zero()) fail(jacobi, "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());
    } catch (const InternalError& e) {
      fail(jacobi, e.what());
    }

    ++change.cases;
    OrderPtr o2 = random_order(N, rng);
    AlgebraElement lhs = (a * b).convert(o2);
    AlgebraElement rhs = a.convert(o2) * b.convert(o2);
    if (!(lhs == rhs) || !(lhs.convert(o) == a * b)) fail(change, "a=" + a.to_string() + " b=" + b.to_string());
  }
  return {assoc, jacobi, div, change};
}

}  // namespace walg
