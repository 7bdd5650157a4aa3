#pragma once
#include <string>

#include "walg/bk_gens.hpp"
#include "walg/report.hpp"

namespace walg {

struct ComputeTArgs {
  std::string pyramid;
  int i = 1, j = 1, x = 0, r = 1, truncate = 0;
  SignConvention convention = SignConvention::IncludeTarget;
};

VerificationReport run_compute_t(const ComputeTArgs& a);
VerificationReport run_verify_whittaker(int N, bool canonical);
VerificationReport run_compute_j(int N, bool semiclassical, bool compare);
VerificationReport run_check_omega(int N);
VerificationReport run_selftest(int N);

}  // namespace walg
