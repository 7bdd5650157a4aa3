#pragma once
#include <doctest.h>

#include <random>

#include "walg/health.hpp"
#include "walg/quotient.hpp"

namespace walg::test {

inline AlgebraElement E(const OrderPtr& o, int i, int j) { return AlgebraElement::gen(o, i, j); }
inline AlgebraElement scalar(const OrderPtr& o, const HbarPoly& c) { return AlgebraElement::scalar(o, c); }
inline HbarPoly h(long k = 1) { return HbarPoly::monomial(k, 1); }

inline ModuleElement vec(const WhittakerQuotient& Q, const AlgebraElement& a, std::vector<int> slots) {
  return Q.reduce(ModuleElement::tensor(a, slots));
}
inline ModuleElement one_v(const WhittakerQuotient& Q, std::vector<int> slots) {
  return ModuleElement::tensor(AlgebraElement::one(Q.order()), slots);
}

// random reduced rank-t element of the quotient
inline ModuleElement random_vec(const WhittakerQuotient& Q, std::mt19937_64& rng, int t = 1) {
  std::uniform_int_distribution<int> k(1, Q.N());
  ModuleElement raw(Q.order(), t);
  for (int n = 0; n < 2; ++n) {
    std::vector<int> s(t);
    for (auto& x : s) x = k(rng);
    raw += ModuleElement::tensor(random_element(Q.order(), rng, 2, 2), s);
  }
  return Q.reduce(raw);
}

}  // namespace walg::test
