#pragma once
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "walg/geometry.hpp"
#include "walg/whittaker.hpp"

namespace walg {

using Pair = std::pair<int, int>;

struct JMatrix {
  int N = 0;
  OrderPtr order;
  // off-identity entries: (row pair (a,l), column pair (i,j)) -> c_ij^al in U_hbar(l)
  std::map<std::pair<Pair, Pair>, AlgebraElement> entries;
  AlgebraElement entry(Pair row, Pair col) const;  // includes the identity
};

struct JComputation {
  JMatrix J;
  WhittakerBasis basis;                  // canonical
  std::map<Pair, ModuleElement> fused;   // v_i^psi fused with v_j^psi
  std::map<Pair, ModuleElement> pairs;   // canonical (v_i (x) v_j)^psi
  ExponentResolution exponent;
};

struct JOptions {
  bool parallel = true;
  bool verify_pairs = true;  // Whittaker + canonical-form check of every pair generator
};

JComputation compute_J(int N, const JOptions& opt = {});

// structural checks on J
struct JStructure {
  bool unipotent_support = true, divisible = true, in_l = true;
  std::string witness;
  bool ok() const { return unipotent_support && divisible && in_l; }
};
JStructure check_J_structure(const JMatrix& J, const WhittakerQuotient& Q);

// commutative polynomial in x21, x11: (a, b) -> coefficient of x21^a x11^b
using XPoly = std::map<std::pair<int, int>, Rational>;
std::string xpoly_to_string(const XPoly& p);

struct SemiclassicalJ {
  int N = 0;
  // tensor term E_first (x) E_second -> polynomial coefficient
  std::map<std::pair<GenIdx, GenIdx>, XPoly> entries;
  void add(GenIdx a, GenIdx b, std::pair<int, int> mono, const Rational& c);
  SemiclassicalJ constant_part() const;
  SemiclassicalJ dynamical_part() const;
  bool operator==(const SemiclassicalJ& o) const { return entries == o.entries; }
  std::string to_string() const;
  int max_x_degree() const;
};

SemiclassicalJ semiclassical_limit(const JMatrix& J);
SemiclassicalJ from_rmatrix(int N, const RMatrixElement& r);

// The E_{i,1} dynamical family appears in two forms:
//  Statement: sum_{r=2}^{i-2} (-1)^{i-r} x11^{i-r-1} E_{1,r} (x) E_{i,1}
//  Proof:     sum_{r=2}^{i-1} (-1)^{i-r} x11^{i-r}   E_{1,r} (x) E_{i,1}
enum class DynamicalConvention { Statement, Proof };
const char* to_string(DynamicalConvention c);
SemiclassicalJ semiclassical_closed_form(int N, DynamicalConvention c = DynamicalConvention::Statement);

struct SemiclassicalComparison {
  int N = 0;
  bool constant_matches_jc = false;
  bool matches_statement = false, matches_proof = false;
  // same entries and exponents once every coefficient is replaced by its absolute value
  bool statement_up_to_sign = false, proof_up_to_sign = false;
  std::vector<std::string> diff_statement, diff_proof;  // per-entry differences
  std::string matched() const;
};
SemiclassicalComparison compare_semiclassical(const SemiclassicalJ& computed);

std::vector<std::string> diff_semiclassical(const SemiclassicalJ& a, const SemiclassicalJ& b);

// first hbar-order recomputed from the asymptotically linear and l-linear parts of the canonical coefficients only
SemiclassicalJ semiclassical_from_asymptotic_parts(const WhittakerQuotient& Q, const WhittakerBasis& canonical);

struct FusionAssociativity {
  int checked = 0, failures = 0;
  std::vector<std::string> failed;
};
FusionAssociativity fuse_power_J(int N, const std::vector<std::array<int, 3>>& triples);

}  // namespace walg
