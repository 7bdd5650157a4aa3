#pragma once
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "walg/algebra.hpp"

namespace walg {

// random element: 1..max_terms terms, words of length 1..max_len, small integer coefficients, hbar powers <= 1
AlgebraElement random_element(OrderPtr o, std::mt19937_64& rng, int max_terms = 3, int max_len = 3);
OrderPtr random_order(int N, std::mt19937_64& rng);

struct HealthResult {
  std::string name;
  int cases = 0, failures = 0;
  std::string first_failure;
  bool ok() const { return cases > 0 && failures == 0; }
};

// PBW associativity, Jacobi, hbar-divisibility of commutators, order-change consistency
std::vector<HealthResult> engine_health(int N, int cases, std::uint64_t seed);

}  // namespace walg
