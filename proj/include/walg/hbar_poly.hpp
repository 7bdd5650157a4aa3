#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace walg {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

// Polynomial in hbar with exact rational coefficients; c[k] is the hbar^k coefficient.
// Trailing zeros are never kept, so the zero polynomial has an empty vector.
class HbarPoly {
 public:
  HbarPoly() = default;
  HbarPoly(long v);  // NOLINT
  HbarPoly(const Rational& v);  // NOLINT
  static HbarPoly monomial(const Rational& c, int power);
  static HbarPoly hbar() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int low_degree() const;                                         // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;

  HbarPoly& operator+=(const HbarPoly& o);
  HbarPoly& operator-=(const HbarPoly& o);
  HbarPoly& operator*=(const Rational& s);
  HbarPoly& operator*=(const HbarPoly& o);
  // this += a * b * hbar^shift
  void add_product(const HbarPoly& a, const HbarPoly& b, int shift = 0);
  void add_scaled(const HbarPoly& a, const Rational& s, int shift = 0);

  HbarPoly shifted(int k) const;  // times hbar^k
  bool divisible_by_hbar() const { return c_.empty() || c_[0] == 0; }
  HbarPoly divided_by_hbar() const;  // throws InternalError on a nonzero constant term
  Rational evaluate(const Rational& h) const;

  friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
  friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }
  friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b);
  friend HbarPoly operator-(HbarPoly a) { return a *= Rational(-1); }
  bool operator==(const HbarPoly& o) const { return c_ == o.c_; }

  std::string to_string() const;
  std::vector<std::string> to_strings() const;
  static HbarPoly from_strings(const std::vector<std::string>& v);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace walg
