#pragma once
#include <map>
#include <utility>
#include <vector>

#include "walg/bk_gens.hpp"
#include "walg/quotient.hpp"

namespace walg {

// Degree of the T_{12} coefficients in the v_1 vector: N-i-2 or N-i-1.
enum class T12Exponent { Short, Long };  // degree N-i-2, N-i-1
int t12_degree(T12Exponent e, int N, int i);
const char* to_string(T12Exponent e);

// v~_{N-j}; for N-j = 1 the T_{12} family with the chosen exponent. No Whittaker check.
ModuleElement tilde_v_unchecked(const WhittakerQuotient& Q, int j, T12Exponent e = T12Exponent::Short);
// Same, but throws InternalError carrying the witness if the vector is not Whittaker.
ModuleElement build_tilde_v(const WhittakerQuotient& Q, int j, T12Exponent e = T12Exponent::Short);

// Tries both exponents on v~_1, returns the one(s) passing the Whittaker check.
struct ExponentResolution {
  bool short_ok = false, long_ok = false;
  T12Exponent chosen = T12Exponent::Short;
  std::string witness;  // failure of the rejected candidate
};
ExponentResolution resolve_t12_exponent(const WhittakerQuotient& Q);

struct WhittakerBasis {
  int N = 0;
  std::vector<ModuleElement> vectors;  // vectors[i-1] has leading term 1 (x) v_i
  bool canonical = false;
  T12Exponent exponent = T12Exponent::Short;
  // corrections c_i^k subtracted during canonicalization (k > i)
  std::map<std::pair<int, int>, AlgebraElement> corrections;
  const ModuleElement& operator[](int i) const { return vectors.at(i - 1); }
};

WhittakerBasis build_tilde_basis(const WhittakerQuotient& Q, T12Exponent e = T12Exponent::Short);
WhittakerBasis canonicalize(const WhittakerQuotient& Q, const WhittakerBasis& tilde);
// leading coefficient 1 (x) v_i, b-reduction equal to it
bool is_canonical_vector(const WhittakerQuotient& Q, const ModuleElement& v, int i);

// terms using only E21, E11 (the unit monomial included)
AlgebraElement l_constant_part(const AlgebraElement& x, const WhittakerQuotient& Q);

struct AsymptoticParts {
  AlgebraElement linear;    // PBW degree one, hbar^0
  AlgebraElement l_linear;  // hbar^0, one b-letter followed by a non-empty l-word
};
AsymptoticParts asymptotic_parts(const AlgebraElement& x, const WhittakerQuotient& Q);

// x_i^j in b_J U(g) where b_J = span{E_kl : k <= l <= J, l >= 2}; tested in an order listing b_J first
bool in_truncated_borel_ideal(const AlgebraElement& x, int J);

// Closed forms for the hbar-constant linear and l-linear parts.
// Linear part of _kT_{ij;x}^(r): sum over blocks h,k of the truncated pyramid with row(h)=i, row(k)=j and
// col(k)-col(h)+1 = r of (-1)^{r-1} E_{h,k}; `with_target_sign` multiplies by sigma_j.
AlgebraElement linear_part_formula(const Pyramid& p, int k, int i, int j, int x, int r, OrderPtr o,
                                   bool with_target_sign);
// sum_{r=2}^{d} s(r) E_{1,r} E_{2,1} E_{1,1}^{d-r}, s(r) = (-1)^r as displayed or (-1)^{d+1}
AlgebraElement l_linear_t22_formula(int d, OrderPtr o, bool displayed_sign = true);
// sum_{r=2}^{d-1} s(r) E_{1,r} E_{1,1}^{d-r}, d = N-i-1 in the displayed form
AlgebraElement l_linear_t12_formula(int d, OrderPtr o, bool displayed_sign = true);

struct AsymptoticFormCheck {
  int N = 0;
  // bullet 1 over every T of the v~ families and every t_element(i,j,1,r)
  int linear_checked = 0, linear_literal = 0, linear_target_sign = 0;
  // bullet 2 over _{i+1}T_22^(j-i)
  int t22_checked = 0, t22_displayed = 0, t22_alt_sign = 0;
  // bullet 3: both superscripts, displayed and alternative sign
  int t12_checked = 0, t12_long_displayed = 0, t12_short_displayed = 0, t12_short_alt_sign = 0;
  std::vector<std::string> mismatches;  // against the displayed forms
  bool displayed_all() const {
    return linear_literal == linear_checked && t22_displayed == t22_checked &&
           (t12_long_displayed == t12_checked || t12_short_displayed == t12_checked);
  }
};
AsymptoticFormCheck check_asymptotic_forms(const WhittakerQuotient& Q, SignConvention conv = SignConvention::IncludeTarget);

// _1T_{i2;1}^(r) = _2T^(r) + _2T^(r-1) E~_{N-1,N-1} + [_2T^(r-1), E~_{N-2,N-1}] and
// [E_{N,N-1}, _1T_{i2;1}^(r)] = _2T_{i2;1}^(r-1) in the quotient, for i = 1,2 and 1 <= r <= N-1.
// _kT^(0)_{i2} is the Kronecker delta.
struct RecursionCheck {
  int checked = 0;
  int relation_failures = 0, adjoint_failures = 0;
  std::vector<std::string> failed;
  bool ok() const { return checked > 0 && relation_failures == 0 && adjoint_failures == 0; }
};
RecursionCheck check_t_recursion(const WhittakerQuotient& Q, SignConvention conv = SignConvention::IncludeTarget);

}  // namespace walg
