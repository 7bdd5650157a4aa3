#include "walg/quotient.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

namespace {
constexpr std::size_t kTermBudget = 10'000'000;
}

ModKey ModuleElement::key(const Monomial& m, const std::vector<int>& slots) {
  ModKey k;
  k.reserve(slots.size() + m.size());
  for (int s : slots) k.push_back(static_cast<char>(s));
  k += m;
  return k;
}

std::vector<int> ModuleElement::slots(const ModKey& k) const {
  std::vector<int> v(t_);
  for (int a = 0; a < t_; ++a) v[a] = static_cast<unsigned char>(k[a]);
  return v;
}

ModuleElement ModuleElement::tensor(const AlgebraElement& a, const std::vector<int>& slots) {
  for (int s : slots)
    if (s < 1 || s > a.N()) throw ValidationError("slot index out of range");
  ModuleElement r(a.order(), static_cast<int>(slots.size()));
  for (auto& [m, c] : a.terms()) r.add_term(key(m, slots), c);
  return r;
}

void ModuleElement::add_term(const ModKey& k, const HbarPoly& c) { add_to(terms_, k, c); }

AlgebraElement ModuleElement::coefficient(const std::vector<int>& slots) const {
  AlgebraElement r(order_);
  ModKey prefix = key("", slots);
  for (auto& [k, c] : terms_)
    if (k.compare(0, t_, prefix) == 0) r.add_term(mono(k), c);
  return r;
}

std::vector<std::vector<int>> ModuleElement::slot_tuples() const {
  std::set<std::vector<int>> s;
  for (auto& [k, c] : terms_) s.insert(slots(k));
  return {s.begin(), s.end()};
}

void ModuleElement::check_compatible(const ModuleElement& o) const {
  if (t_ != o.t_) throw StructuralError("tensor ranks differ");
  if (order_ && o.order_ && order_ != o.order_ && !order_->same_as(*o.order_))
    throw StructuralError("generator orders differ");
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (!order_) order_ = o.order_, t_ = o.t_;
  check_compatible(o);
  for (auto& [k, c] : o.terms_) add_to(terms_, k, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (!order_) order_ = o.order_, t_ = o.t_;
  check_compatible(o);
  for (auto& [k, c] : o.terms_) add_scaled_to(terms_, k, c, -1, 0);
  return *this;
}

ModuleElement ModuleElement::scaled(const HbarPoly& c) const {
  ModuleElement r(order_, t_);
  for (auto& [k, d] : terms_) add_product_to(r.terms_, k, d, c, 0);
  return r;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  return t_ == o.t_ && terms_ == o.terms_;
}

bool ModuleElement::divisible_by_hbar() const {
  for (auto& [k, c] : terms_)
    if (!c.divisible_by_hbar()) return false;
  return true;
}

std::string ModuleElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<ModKey, HbarPoly>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [&](auto& a, auto& b) {
    if (a.first.compare(0, t_, b.first, 0, t_) != 0) return a.first.compare(0, t_, b.first, 0, t_) < 0;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : v) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    if (c.low_degree() != c.degree()) cs = "(" + cs + ")";
    std::string ms = monomial_to_string(*order_, mono(k));
    if (ms == "1")
      os << cs;
    else if (cs == "1")
      os << ms;
    else
      os << cs << "*" << ms;
    os << " (x) v";
    for (int s : slots(k)) os << "_" << s;
  }
  return os.str();
}

WhittakerQuotient::WhittakerQuotient(const Pyramid& p) : p_(p), o_(canonical_order(p)) {
  int S = o_->size();
  kind_.assign(S, 'p');
  psi_.assign(S, Rational(0));
  CharacterPsi ps(p);
  int last_p = -1, first_m = S;
  for (int r = 0; r < S; ++r) {
    GenIdx g = o_->gen(static_cast<Rank>(r));
    if (ps.in_m(g.i, g.j)) {
      kind_[r] = 'm';
      psi_[r] = ps(g.i, g.j);
      m_basis_.push_back(g);
      first_m = std::min(first_m, r);
    } else {
      last_p = std::max(last_p, r);
    }
  }
  if (last_p > first_m) throw StructuralError("generator order must put m-generators last");
  if (p.is_subregular()) {
    int N = p.N();
    int nb = 0, nl = 0, nc = 0;
    for (int r = 0; r < S; ++r) {
      GenIdx g = o_->gen(static_cast<Rank>(r));
      if (kind_[r] == 'm') continue;
      bool b = g.i <= g.j && g.j <= N - 1 && g.j >= 2;
      bool l = (g.i == 2 && g.j == 1) || (g.i == 1 && g.j == 1);
      bool c = g.j == N;
      if (b + l + c != 1) throw InternalError("b, l, column N do not partition p at " + g.to_string());
      kind_[r] = b ? 'b' : l ? 'l' : 'c';
      nb += b, nl += l, nc += c;
    }
    // dim p = (N^2 + N + 2)/2 and the canonical order lists b, then l, then column N
    if (N <= 12 && nb + nl + nc != (N * N + N + 2) / 2) throw InternalError("p has the wrong dimension");
    for (int r = 1; r < S; ++r) {
      auto rk = [](char k) { return k == 'b' ? 0 : k == 'l' ? 1 : k == 'c' ? 2 : 3; };
      if (rk(kind_[r]) < rk(kind_[r - 1])) throw InternalError("canonical order is not b < l < col N < m");
    }
  }
}

void WhittakerQuotient::act_on_slots(GenIdx g, const ModKey& k, const HbarPoly& c, int t, const HbarPoly& scale,
                                     ModTermMap& out) const {
  // E_ab . v_k = d_bk v_a, summed over slots
  for (int a = 0; a < t; ++a) {
    if (static_cast<unsigned char>(k[a]) != g.j) continue;
    ModKey k2 = k;
    k2[a] = static_cast<char>(g.i);
    add_product_to(out, k2, c, scale, 0);
  }
}

ModuleElement WhittakerQuotient::reduce(const ModuleElement& raw) const {
  int t = raw.t();
  ModuleElement out(o_, t);
  if (raw.is_zero()) return out;
  if (raw.order() != o_ && !raw.order()->same_as(*o_)) throw StructuralError("element not in the canonical order");
  // levels by m-letter count so that equal keys merge before further peeling
  ModTermMap cur = raw.terms();
  std::size_t steps = 0;
  std::size_t max_m = 0;
  for (auto& [k, c] : cur) {
    std::size_t mc = 0;
    for (std::size_t q = t; q < k.size(); ++q) mc += in_m(static_cast<Rank>(k[q]));
    max_m = std::max(max_m, mc);
  }
  const std::size_t bound = (max_m + 1) * kTermBudget;
  const HbarPoly h = HbarPoly::hbar();
  while (!cur.empty()) {
    ModTermMap next;
    for (auto& [k, c] : cur) {
      if (++steps > bound) throw InternalError("reduction mod m^psi exceeded its iteration bound");
      if (k.size() == static_cast<std::size_t>(t) || !in_m(static_cast<Rank>(k.back()))) {
        add_to(out.mutable_terms(), k, c);
        continue;
      }
      Rank xi = static_cast<Rank>(k.back());
      ModKey u = k.substr(0, k.size() - 1);
      if (psi_[xi] != 0) add_scaled_to(next, u, c, psi_[xi], 0);
      act_on_slots(o_->gen(xi), u, c, t, h, next);
    }
    cur.swap(next);
  }
  return out;
}

ModuleElement WhittakerQuotient::reduce_interleaved(const ModuleElement& raw) const {
  int t = raw.t();
  ModuleElement out(o_, t);
  ModTermMap cur = raw.terms();
  const HbarPoly h = HbarPoly::hbar();
  std::size_t steps = 0;
  while (!cur.empty()) {
    ModTermMap next;
    for (auto& [k, c] : cur) {
      if (++steps > kTermBudget) throw InternalError("interleaved reduction exceeded its iteration bound");
      // first m-letter position
      std::size_t pos = k.size();
      for (std::size_t q = t; q < k.size(); ++q)
        if (in_m(static_cast<Rank>(k[q]))) {
          pos = q;
          break;
        }
      if (pos == k.size()) {
        add_to(out.mutable_terms(), k, c);
        continue;
      }
      // u xi R = (u R) xi + hbar u [xi, R]
      Rank xi = static_cast<Rank>(k[pos]);
      Monomial u = k.substr(t, pos - t);
      Monomial R = k.substr(pos + 1);
      ModKey slots = k.substr(0, t);
      ModKey uR = slots + u + R;
      if (psi_[xi] != 0) add_scaled_to(next, uR, c, psi_[xi], 0);
      act_on_slots(o_->gen(xi), uR, c, t, h, next);
      if (!R.empty()) {
        AlgebraElement xiE(o_, TermMap{{Monomial(1, static_cast<char>(xi)), HbarPoly(1)}});
        AlgebraElement RE(o_, TermMap{{R, HbarPoly(1)}});
        AlgebraElement uE(o_, TermMap{{u, HbarPoly(1)}});
        AlgebraElement corr = multiply(uE, commutator(xiE, RE));
        for (auto& [m, d] : corr.terms()) add_product_to(next, slots + m, c, d, 1);
      }
    }
    cur.swap(next);
  }
  return out;
}

ModuleElement WhittakerQuotient::act_left(const AlgebraElement& a, const ModuleElement& m) const {
  int t = m.t();
  ModuleElement raw(o_, t);
  for (auto& [k, c] : m.terms()) {
    Monomial mono = m.mono(k);
    ModKey slots = k.substr(0, t);
    for (auto& [am, ac] : a.terms()) {
      TermMap prod;
      mul_mono_mono(*o_, am, mono, ac * c, prod);
      for (auto& [pm, pc] : prod) add_to(raw.mutable_terms(), slots + pm, pc);
    }
  }
  return reduce(raw);
}

ModuleElement WhittakerQuotient::ad_action(GenIdx xi, const ModuleElement& m) const {
  CharacterPsi ps(p_);
  if (!ps.in_m(xi.i, xi.j)) throw ValidationError("ad_action needs xi in m, got " + xi.to_string());
  int t = m.t();
  Rank rx = o_->rank(xi);
  ModuleElement raw(o_, t);
  const HbarPoly one(1);
  for (auto& [k, c] : m.terms()) {
    Monomial mono = m.mono(k);
    ModKey slots = k.substr(0, t);
    // [xi, mono] = (xi mono - mono xi)/hbar
    TermMap d;
    mul_mono_mono(*o_, Monomial(1, static_cast<char>(rx)), mono, c, d);
    TermMap e;
    mul_mono_gen(*o_, mono, rx, c, 0, e);
    for (auto& [q, v] : e) add_scaled_to(d, q, v, -1, 0);
    for (auto& [q, v] : d) add_to(raw.mutable_terms(), slots + q, v.divided_by_hbar());
    act_on_slots(xi, k, c, t, one, raw.mutable_terms());
  }
  return reduce(raw);
}

WhittakerCheck WhittakerQuotient::is_whittaker(const ModuleElement& m) const {
  WhittakerCheck w;
  for (auto g : m_basis_) {
    ++w.checked;
    ModuleElement r = ad_action(g, m);
    if (!r.is_zero()) {
      w.ok = false;
      w.witness = g;
      w.residue = r;
      return w;
    }
  }
  return w;
}

ModuleElement WhittakerQuotient::reduce_mod_b_left(const ModuleElement& m) const {
  if (!p_.is_subregular()) throw UnsupportedError("left b-quotient is only defined for subregular pyramids");
  ModuleElement r(o_, m.t());
  for (auto& [k, c] : m.terms()) {
    if (k.size() > static_cast<std::size_t>(m.t()) && in_b(static_cast<Rank>(k[m.t()]))) continue;
    r.add_term(k, c);
  }
  return r;
}

bool WhittakerQuotient::is_m_reduced(const ModuleElement& m) const {
  for (auto& [k, c] : m.terms())
    for (std::size_t q = m.t(); q < k.size(); ++q)
      if (in_m(static_cast<Rank>(k[q]))) return false;
  return true;
}

void WhittakerQuotient::transport(const ModKey& k, const HbarPoly& c, const Monomial& y, int t, ModTermMap& out) const {
  ModTermMap cur;
  cur.emplace(k, c);
  const HbarPoly minus_h = HbarPoly::monomial(-1, 1);
  for (char ch : y) {
    Rank g = static_cast<Rank>(ch);
    ModTermMap next;
    for (auto& [kk, cc] : cur) {
      ModKey slots = kk.substr(0, t);
      TermMap prod;
      mul_mono_gen(*o_, kk.substr(t), g, cc, 0, prod);
      for (auto& [pm, pc] : prod) add_to(next, slots + pm, pc);
      act_on_slots(o_->gen(g), kk, cc, t, minus_h, next);
    }
    cur.swap(next);
  }
  for (auto& [kk, cc] : cur) add_to(out, kk, cc);
}

ModuleElement WhittakerQuotient::right_act(const ModuleElement& m, const AlgebraElement& c) const {
  int t = m.t();
  ModuleElement raw(o_, t);
  for (auto& [y, yc] : c.terms()) {
    for (auto& [k, kc] : m.terms()) transport(k, kc * yc, y, t, raw.mutable_terms());
  }
  return reduce(raw);
}

ModuleElement WhittakerQuotient::fuse(const ModuleElement& a, const ModuleElement& b) const {
  int ta = a.t(), tb = b.t();
  ModuleElement raw(o_, ta + tb);
  // group b by its U-factor so each monomial is transported through a once
  std::unordered_map<Monomial, std::vector<std::pair<std::string, HbarPoly>>> by_mono;
  for (auto& [k, c] : b.terms()) by_mono[b.mono(k)].emplace_back(k.substr(0, tb), c);
  for (auto& [y, tails] : by_mono) {
    ModTermMap moved;
    for (auto& [k, c] : a.terms()) transport(k, c, y, ta, moved);
    for (auto& [k, c] : moved) {
      std::string sa = k.substr(0, ta);
      std::string mono = k.substr(ta);
      for (auto& [sb, cb] : tails) add_product_to(raw.mutable_terms(), sa + sb + mono, c, cb, 0);
    }
  }
  return reduce(raw);
}

}  // namespace walg
