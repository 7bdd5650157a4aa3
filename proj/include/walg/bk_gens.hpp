#pragma once
#include <vector>

#include "walg/pyramid.hpp"

namespace walg {

// How the sigma weight of a summand is formed.
//  Literal:       sigma_row(j_1) ... sigma_row(j_{s-1})
//  IncludeTarget: sigma_row(j_1) ... sigma_row(j_s), i.e. an extra overall sigma_j.
// IncludeTarget is the default: it is the one giving T_{21;1}^{(1)} = -E_{2,1}.
enum class SignConvention { IncludeTarget, Literal };

struct TSequence {
  std::vector<int> blocks;  // i_1, j_1, ..., i_s, j_s
  int sign = 1;
  int s() const { return static_cast<int>(blocks.size()) / 2; }
};

std::vector<TSequence> enumerate_t_sequences(const Pyramid& p, int i, int j, int x, int r,
                                             SignConvention conv = SignConvention::IncludeTarget);

struct TGenerator {
  int i = 0, j = 0, x = 0, r = 0, truncation = 0;
  SignConvention convention = SignConvention::IncludeTarget;
  Pyramid pyramid;  // the full pyramid whose algebra holds `value`
  AlgebraElement value;
  int kazhdan_degree = kNegInfDegree;
};

// T_{ij;x}^{(r)} in the canonical order of p
TGenerator t_element(const Pyramid& p, int i, int j, int x, int r,
                     SignConvention conv = SignConvention::IncludeTarget);
// _kT_{ij;x}^{(r)}: enumerate in the truncated pyramid, substitute the full pyramid's E~
TGenerator truncated_t(const Pyramid& p, int k, int i, int j, int x, int r,
                       SignConvention conv = SignConvention::IncludeTarget);
TGenerator truncated_t(const Pyramid& p, int k, int i, int j, int x, int r, OrderPtr o,
                       SignConvention conv = SignConvention::IncludeTarget);

// sum of E~_{h,k} over same-column blocks with row(h)=i, row(k)=j (times sigma_j under IncludeTarget)
AlgebraElement t1_closed_form(const Pyramid& p, int i, int j, int x,
                              SignConvention conv = SignConvention::IncludeTarget);

std::vector<TGenerator> subregular_w_generators(int N);

void clear_t_cache();
std::size_t t_cache_size();

}  // namespace walg
