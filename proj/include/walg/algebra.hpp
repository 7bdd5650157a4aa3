#pragma once
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "walg/generator_order.hpp"
#include "walg/hbar_poly.hpp"

namespace walg {

// PBW monomial: ranks in non-decreasing order, one char per letter (E^3 is three equal chars).
using Monomial = std::string;
using TermMap = std::unordered_map<Monomial, HbarPoly>;

void add_to(TermMap& acc, const Monomial& m, const HbarPoly& c);
void add_scaled_to(TermMap& acc, const Monomial& m, const HbarPoly& c, const Rational& s, int shift);
void add_product_to(TermMap& acc, const Monomial& m, const HbarPoly& a, const HbarPoly& b, int shift);

// (GenIdx, exponent) runs of a monomial
std::vector<std::pair<GenIdx, int>> factors(const GeneratorOrder& o, const Monomial& m);
Monomial monomial_from_factors(const GeneratorOrder& o, const std::vector<std::pair<GenIdx, int>>& f);

// Normal ordering kernel. acc += c * hbar^shift * NF(m * g), m already normal.
void mul_mono_gen(const GeneratorOrder& o, const Monomial& m, Rank g, const HbarPoly& c, int shift, TermMap& acc);
// acc += c * NF(a * b)
void mul_mono_mono(const GeneratorOrder& o, const Monomial& a, const Monomial& b, const HbarPoly& c, TermMap& acc);
// acc += c * NF(g_1 g_2 ... g_k) for an arbitrary word of ranks
void normal_order_word(const GeneratorOrder& o, const std::vector<Rank>& word, const HbarPoly& c, TermMap& acc);
void clear_normal_order_cache();
std::size_t normal_order_cache_size();

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(OrderPtr o) : order_(std::move(o)) {}
  AlgebraElement(OrderPtr o, TermMap t);

  static AlgebraElement scalar(OrderPtr o, const HbarPoly& c);
  static AlgebraElement one(OrderPtr o) { return scalar(std::move(o), HbarPoly(1)); }
  static AlgebraElement hbar(OrderPtr o) { return scalar(std::move(o), HbarPoly::hbar()); }
  static AlgebraElement gen(OrderPtr o, int i, int j);
  static AlgebraElement from_word(OrderPtr o, const std::vector<GenIdx>& word, const HbarPoly& c = 1);

  const OrderPtr& order() const { return order_; }
  int N() const { return order_ ? order_->N() : 0; }
  const TermMap& terms() const { return terms_; }
  std::vector<std::pair<Monomial, HbarPoly>> sorted_terms() const;  // by (length, monomial)
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  HbarPoly coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const HbarPoly& c) { add_to(terms_, m, c); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& s);
  AlgebraElement scaled(const HbarPoly& c) const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  bool operator==(const AlgebraElement& o) const;

  AlgebraElement convert(OrderPtr target) const;
  bool divisible_by_hbar() const;
  AlgebraElement divided_by_hbar() const;  // InternalError if not divisible
  AlgebraElement evaluate_hbar(const Rational& h) const;
  AlgebraElement hbar_coefficient(int k) const;  // terms' hbar^k coefficients as constants
  int pbw_degree() const;                        // -1 for zero

  std::string to_string() const;

 private:
  void check_compatible(const AlgebraElement& o) const;
  OrderPtr order_;
  TermMap terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);  // (ab - ba)/hbar
std::string monomial_to_string(const GeneratorOrder& o, const Monomial& m);

}  // namespace walg
