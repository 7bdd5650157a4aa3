#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walg/generator_order.hpp"
#include "walg/hbar_poly.hpp"

namespace walg {

struct WonderbolicBasis {
  int N = 0;
  std::vector<GenIdx> m_basis, b_basis, w_basis;  // w = m then b
  int index(GenIdx g) const;                      // position in w_basis or -1
};
WonderbolicBasis wonderbolic_basis(int N);
bool in_wonderbolic(int N, const std::vector<std::pair<GenIdx, Rational>>& x);

using RationalMatrix = std::vector<std::vector<Rational>>;
RationalMatrix omega_matrix(const WonderbolicBasis& w);  // Tr(e [x,y]) for the subregular e
Rational omega(int N, GenIdx x, GenIdx y);
Rational determinant(RationalMatrix a);

// sum of coeff * first (x) second
struct RMatrixElement {
  std::map<std::pair<GenIdx, GenIdx>, Rational> terms;
  void add(GenIdx a, GenIdx b, const Rational& c);
  RMatrixElement flipped() const;
  RMatrixElement operator-(const RMatrixElement& o) const;
  bool operator==(const RMatrixElement& o) const { return terms == o.terms; }
  std::string to_string() const;
};

// sign in front of j^21(E*_{i-1,j-1}) in the recursion for j >= 3.
// Derived (+) follows from the column formula for omega; AsPrinted (-) is the displayed one.
enum class RecursionSign { Derived, AsPrinted };

RMatrixElement jc21_recursive(int N, RecursionSign s = RecursionSign::Derived);
RMatrixElement jc_recursive(int N, RecursionSign s = RecursionSign::Derived);
RMatrixElement jc_closed_form(int N);

struct InverseReport {
  bool nondegenerate = false, m_isotropic = false, b_isotropic = false;
  bool recursive_equals_closed = false, inverse_ok = false, antisymmetric = false, e_outside_w = false;
  Rational det;
  std::string diff;  // first mismatch, if any
  bool ok() const {
    return nondegenerate && m_isotropic && b_isotropic && recursive_equals_closed && inverse_ok && antisymmetric &&
           e_outside_w;
  }
};
InverseReport verify_inverse(int N, RecursionSign s = RecursionSign::Derived);

}  // namespace walg
