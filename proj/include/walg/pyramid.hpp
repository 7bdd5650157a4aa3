#pragma once
#include <climits>
#include <map>
#include <string>
#include <vector>

#include "walg/algebra.hpp"

namespace walg {

// Unimodal column heights, bottom aligned. Rows are counted from the top (row 1 is the
// top row of the tallest column); blocks are numbered column by column, left to right,
// top to bottom inside a column.
class Pyramid {
 public:
  static Pyramid from_heights(const std::vector<int>& q);
  static Pyramid subregular(int N);
  static Pyramid parse(const std::string& literal);  // "1,3,2,1" or "subreg:N"

  const std::vector<int>& heights() const { return q_; }
  int N() const { return N_; }
  int n() const { return n_; }
  int columns() const { return static_cast<int>(q_.size()); }
  int row(int b) const { return row_.at(b - 1); }
  int col(int b) const { return col_.at(b - 1); }
  int block_at(int row, int col) const;  // 0 if empty
  int rho(int c) const;                  // n - sum_{k >= c} q_k
  int degree(int i, int j) const { return col(j) - col(i); }
  Pyramid truncated(int k) const;
  bool is_subregular() const;
  std::string spec() const;
  bool operator==(const Pyramid& o) const { return q_ == o.q_; }

 private:
  std::vector<int> q_;
  int N_ = 0, n_ = 0;
  std::vector<int> row_, col_;
};

OrderPtr canonical_order(const Pyramid& p);
// p-generators first, m-generators last, ties lexicographic
OrderPtr parabolic_order(const Pyramid& p);

AlgebraElement nilpotent_e(const Pyramid& p, OrderPtr o);

struct Subalgebras {
  std::vector<GenIdx> m, p;
};
Subalgebras subalgebras(const Pyramid& p);

class CharacterPsi {
 public:
  explicit CharacterPsi(const Pyramid& p);
  Rational operator()(int i, int j) const;  // ValidationError outside m
  bool in_m(int i, int j) const { return values_.count({i, j}) != 0; }
  const std::map<GenIdx, Rational>& values() const { return values_; }

 private:
  std::map<GenIdx, Rational> values_;
};

inline CharacterPsi psi(const Pyramid& p) { return CharacterPsi(p); }

// (-1)^{col j - col i} (E_ij + d_ij hbar rho_{col i}); `shift_source` supplies rho
// (pass the full pyramid to realize the truncation embedding).
AlgebraElement modified_gen(const Pyramid& p, int i, int j, OrderPtr o);
AlgebraElement modified_gen(const Pyramid& p, const Pyramid& shift_source, int i, int j, OrderPtr o);

constexpr int kNegInfDegree = INT_MIN;
int kazhdan_degree(const AlgebraElement& a, const Pyramid& p);
// graded piece of exact Kazhdan degree d
AlgebraElement kazhdan_component(const AlgebraElement& a, const Pyramid& p, int d);

}  // namespace walg
