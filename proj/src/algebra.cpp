#include "walg/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

void add_to(TermMap& acc, const Monomial& m, const HbarPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = acc.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

void add_scaled_to(TermMap& acc, const Monomial& m, const HbarPoly& c, const Rational& s, int shift) {
  if (c.is_zero() || s == 0) return;
  auto& slot = acc[m];
  slot.add_scaled(c, s, shift);
  if (slot.is_zero()) acc.erase(m);
}

void add_product_to(TermMap& acc, const Monomial& m, const HbarPoly& a, const HbarPoly& b, int shift) {
  if (a.is_zero() || b.is_zero()) return;
  auto& slot = acc[m];
  slot.add_product(a, b, shift);
  if (slot.is_zero()) acc.erase(m);
}

std::vector<std::pair<GenIdx, int>> factors(const GeneratorOrder& o, const Monomial& m) {
  std::vector<std::pair<GenIdx, int>> out;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t e = k;
    while (e < m.size() && m[e] == m[k]) ++e;
    out.emplace_back(o.gen(static_cast<Rank>(m[k])), static_cast<int>(e - k));
    k = e;
  }
  return out;
}

Monomial monomial_from_factors(const GeneratorOrder& o, const std::vector<std::pair<GenIdx, int>>& f) {
  Monomial m;
  int last = -1;
  for (auto& [g, e] : f) {
    if (g.i < 1 || g.j < 1 || g.i > o.N() || g.j > o.N()) throw ValidationError("unit out of range: " + g.to_string());
    if (e < 1) throw ValidationError("exponent must be positive");
    int r = o.rank(g);
    if (r <= last) throw ValidationError("monomial factors not strictly increasing in the generator order");
    last = r;
    m.append(e, static_cast<char>(r));
  }
  return m;
}

std::string monomial_to_string(const GeneratorOrder& o, const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [g, e] : factors(o, m)) {
    if (!first) os << "*";
    first = false;
    if (o.N() > 9)
      os << "E(" << g.i << "," << g.j << ")";
    else
      os << "E" << g.i << g.j;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

AlgebraElement::AlgebraElement(OrderPtr o, TermMap t) : order_(std::move(o)), terms_(std::move(t)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

AlgebraElement AlgebraElement::scalar(OrderPtr o, const HbarPoly& c) {
  AlgebraElement a(std::move(o));
  a.add_term(Monomial(), c);
  return a;
}

AlgebraElement AlgebraElement::gen(OrderPtr o, int i, int j) {
  if (i < 1 || j < 1 || i > o->N() || j > o->N())
    throw ValidationError("unit out of range: E" + std::to_string(i) + "," + std::to_string(j));
  AlgebraElement a(o);
  a.add_term(Monomial(1, static_cast<char>(o->rank(i, j))), HbarPoly(1));
  return a;
}

AlgebraElement AlgebraElement::from_word(OrderPtr o, const std::vector<GenIdx>& word, const HbarPoly& c) {
  std::vector<Rank> w;
  for (auto g : word) {
    if (g.i < 1 || g.j < 1 || g.i > o->N() || g.j > o->N()) throw ValidationError("unit out of range: " + g.to_string());
    w.push_back(o->rank(g));
  }
  AlgebraElement a(o);
  normal_order_word(*o, w, c, a.terms_);
  return a;
}

std::vector<std::pair<Monomial, HbarPoly>> AlgebraElement::sorted_terms() const {
  std::vector<std::pair<Monomial, HbarPoly>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return v;
}

HbarPoly AlgebraElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? HbarPoly() : it->second;
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (!order_ || !o.order_) throw StructuralError("element without ambient order");
  if (order_ == o.order_) return;
  if (order_->N() != o.order_->N()) throw StructuralError("mismatched N");
  if (!order_->same_as(*o.order_)) throw StructuralError("mismatched generator order");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!order_) order_ = o.order_;
  check_compatible(o);
  for (auto& [m, c] : o.terms_) add_to(terms_, m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (!order_) order_ = o.order_;
  check_compatible(o);
  for (auto& [m, c] : o.terms_) add_scaled_to(terms_, m, c, -1, 0);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

AlgebraElement AlgebraElement::scaled(const HbarPoly& c) const {
  AlgebraElement r(order_);
  for (auto& [m, d] : terms_) add_product_to(r.terms_, m, d, c, 0);
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  if (!order_ || !o.order_) return false;
  if (order_ != o.order_ && !order_->same_as(*o.order_)) return false;
  return terms_ == o.terms_;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.order() || !b.order()) throw StructuralError("element without ambient order");
  if (a.order() != b.order() && (a.N() != b.N() || !a.order()->same_as(*b.order())))
    throw StructuralError(a.N() != b.N() ? "mismatched N" : "mismatched generator order");
  TermMap acc;
  const auto& o = *a.order();
  for (auto& [ma, ca] : a.terms()) {
    for (auto& [mb, cb] : b.terms()) mul_mono_mono(o, ma, mb, ca * cb, acc);
  }
  return AlgebraElement(a.order(), std::move(acc));
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement d = multiply(a, b) - multiply(b, a);
  if (!d.divisible_by_hbar())
    throw InternalError("ab - ba not divisible by hbar; rewrite engine is inconsistent");
  return d.divided_by_hbar();
}

AlgebraElement AlgebraElement::convert(OrderPtr target) const {
  if (!order_) return AlgebraElement(std::move(target));
  if (target->N() != N()) throw StructuralError("mismatched N in convert");
  AlgebraElement r(target);
  for (auto& [m, c] : terms_) {
    std::vector<Rank> w;
    w.reserve(m.size());
    for (char ch : m) w.push_back(target->rank(order_->gen(static_cast<Rank>(ch))));
    normal_order_word(*target, w, c, r.terms_);
  }
  return r;
}

bool AlgebraElement::divisible_by_hbar() const {
  for (auto& [m, c] : terms_)
    if (!c.divisible_by_hbar()) return false;
  return true;
}

AlgebraElement AlgebraElement::divided_by_hbar() const {
  AlgebraElement r(order_);
  for (auto& [m, c] : terms_) r.terms_.emplace(m, c.divided_by_hbar());
  return r;
}

AlgebraElement AlgebraElement::evaluate_hbar(const Rational& h) const {
  AlgebraElement r(order_);
  for (auto& [m, c] : terms_) r.add_term(m, HbarPoly(c.evaluate(h)));
  return r;
}

AlgebraElement AlgebraElement::hbar_coefficient(int k) const {
  AlgebraElement r(order_);
  for (auto& [m, c] : terms_) r.add_term(m, HbarPoly(c.coeff(k)));
  return r;
}

int AlgebraElement::pbw_degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : sorted_terms()) {
    std::string cs = c.to_string();
    std::string ms = monomial_to_string(*order_, m);
    bool simple = c.coeffs().size() == 1 || (c.low_degree() == c.degree());
    if (!first) os << " + ";
    first = false;
    if (m.empty()) {
      os << (simple ? cs : "(" + cs + ")");
    } else if (cs == "1") {
      os << ms;
    } else if (cs == "-1") {
      os << "-" << ms;
    } else {
      os << (simple ? cs : "(" + cs + ")") << "*" << ms;
    }
  }
  return os.str();
}

}  // namespace walg
