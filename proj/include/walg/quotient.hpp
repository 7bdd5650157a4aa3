#pragma once
#include <optional>
#include <string>
#include <vector>

#include "walg/pyramid.hpp"

namespace walg {

// Key layout: t slot bytes (values 1..N) followed by the PBW monomial.
using ModKey = std::string;
using ModTermMap = std::unordered_map<ModKey, HbarPoly>;

class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(OrderPtr o, int t) : order_(std::move(o)), t_(t) {}

  static ModuleElement tensor(const AlgebraElement& a, const std::vector<int>& slots);
  static ModKey key(const Monomial& m, const std::vector<int>& slots);
  Monomial mono(const ModKey& k) const { return k.substr(t_); }
  std::vector<int> slots(const ModKey& k) const;

  const OrderPtr& order() const { return order_; }
  int N() const { return order_ ? order_->N() : 0; }
  int t() const { return t_; }
  const ModTermMap& terms() const { return terms_; }
  ModTermMap& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const ModKey& k, const HbarPoly& c);
  void add_term(const Monomial& m, const std::vector<int>& slots, const HbarPoly& c) { add_term(key(m, slots), c); }

  // U-factor multiplying a given slot tuple
  AlgebraElement coefficient(const std::vector<int>& slots) const;
  std::vector<std::vector<int>> slot_tuples() const;  // sorted

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement scaled(const HbarPoly& c) const;
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  bool operator==(const ModuleElement& o) const;
  bool divisible_by_hbar() const;

  std::string to_string() const;

 private:
  void check_compatible(const ModuleElement& o) const;
  OrderPtr order_;
  int t_ = 0;
  ModTermMap terms_;
};

struct WhittakerCheck {
  bool ok = true;
  std::optional<GenIdx> witness;  // first offending xi
  ModuleElement residue;          // its ad-image
  int checked = 0;
};

// U_hbar(g) (x) (C^N)^{(x)t} / m^psi with the canonical generator order (m-generators last).
class WhittakerQuotient {
 public:
  explicit WhittakerQuotient(const Pyramid& p);

  const Pyramid& pyramid() const { return p_; }
  const OrderPtr& order() const { return o_; }
  int N() const { return p_.N(); }
  bool in_m(Rank r) const { return kind_[r] == 'm'; }
  bool in_b(Rank r) const { return kind_[r] == 'b'; }
  bool in_l(Rank r) const { return kind_[r] == 'l'; }
  const std::vector<GenIdx>& m_basis() const { return m_basis_; }

  ModuleElement reduce(const ModuleElement& raw) const;
  // peels the first m-letter after commuting it to the end; used to test confluence
  ModuleElement reduce_interleaved(const ModuleElement& raw) const;
  ModuleElement act_left(const AlgebraElement& a, const ModuleElement& m) const;
  ModuleElement ad_action(GenIdx xi, const ModuleElement& m) const;
  WhittakerCheck is_whittaker(const ModuleElement& m) const;
  // subregular only
  ModuleElement reduce_mod_b_left(const ModuleElement& m) const;
  bool is_m_reduced(const ModuleElement& m) const;

  // (x (x) v) . c  with  (x (x) v) . E = xE (x) v - hbar x (x) E.v, then reduced
  ModuleElement right_act(const ModuleElement& m, const AlgebraElement& c) const;
  ModuleElement fuse(const ModuleElement& a, const ModuleElement& b) const;

  // raw transport without the final reduction (exposed for the parallel kernels)
  void transport(const ModKey& k, const HbarPoly& c, const Monomial& y, int t, ModTermMap& out) const;
  void act_on_slots(GenIdx g, const ModKey& k, const HbarPoly& c, int t, const HbarPoly& scale, ModTermMap& out) const;

 private:
  Pyramid p_;
  OrderPtr o_;
  std::vector<char> kind_;  // per rank: 'm', 'b', 'l', 'c' (column N) or 'p'
  std::vector<Rational> psi_;
  std::vector<GenIdx> m_basis_;
};

}  // namespace walg
