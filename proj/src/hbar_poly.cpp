#include "walg/hbar_poly.hpp"

#include <sstream>

#include "walg/errors.hpp"

namespace walg {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ValidationError("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw ValidationError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(10); }

HbarPoly::HbarPoly(long v) {
  if (v != 0) c_.emplace_back(v);
}

HbarPoly::HbarPoly(const Rational& v) {
  if (v != 0) c_.push_back(v);
}

HbarPoly HbarPoly::monomial(const Rational& c, int power) {
  HbarPoly p;
  if (c != 0) {
    p.c_.assign(power + 1, Rational(0));
    p.c_[power] = c;
  }
  return p;
}

int HbarPoly::low_degree() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

Rational HbarPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

void HbarPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

HbarPoly& HbarPoly::operator+=(const HbarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

HbarPoly& HbarPoly::operator-=(const HbarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

HbarPoly& HbarPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
  HbarPoly r;
  r.add_product(a, b, 0);
  return r;
}

HbarPoly& HbarPoly::operator*=(const HbarPoly& o) {
  HbarPoly r;
  r.add_product(*this, o, 0);
  *this = std::move(r);
  return *this;
}

void HbarPoly::add_product(const HbarPoly& a, const HbarPoly& b, int shift) {
  if (a.c_.empty() || b.c_.empty()) return;
  size_t need = a.c_.size() + b.c_.size() - 1 + shift;
  if (c_.size() < need) c_.resize(need);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_t t;
      mpq_init(t);
      mpq_mul(t, a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      mpq_add(c_[i + j + shift].get_mpq_t(), c_[i + j + shift].get_mpq_t(), t);
      mpq_clear(t);
    }
  }
  trim();
}

void HbarPoly::add_scaled(const HbarPoly& a, const Rational& s, int shift) {
  if (a.c_.empty() || s == 0) return;
  size_t need = a.c_.size() + shift;
  if (c_.size() < need) c_.resize(need);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    c_[i + shift] += a.c_[i] * s;
  }
  trim();
}

HbarPoly HbarPoly::shifted(int k) const {
  HbarPoly r;
  if (c_.empty()) return r;
  r.c_.assign(k, Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

HbarPoly HbarPoly::divided_by_hbar() const {
  if (!divisible_by_hbar()) throw InternalError("hbar-division with nonzero constant term " + to_string());
  HbarPoly r;
  if (!c_.empty()) r.c_.assign(c_.begin() + 1, c_.end());
  return r;
}

Rational HbarPoly::evaluate(const Rational& h) const {
  Rational acc = 0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * h + c_[k];
  return acc;
}

std::string HbarPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational v = c_[k];
    if (!first) {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (k == 0) {
      os << v.get_str();
    } else {
      if (v != 1 && v != -1) os << v.get_str() << "*";
      if (v == -1) os << "-";
      os << "h";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::vector<std::string> HbarPoly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (auto& q : c_) out.push_back(rational_str(q));
  return out;
}

HbarPoly HbarPoly::from_strings(const std::vector<std::string>& v) {
  HbarPoly p;
  for (auto& s : v) p.c_.push_back(parse_rational(s));
  p.trim();
  return p;
}

}  // namespace walg
