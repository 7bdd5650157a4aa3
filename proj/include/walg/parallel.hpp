#pragma once
#include <array>
#include <vector>

#include "walg/bk_gens.hpp"
#include "walg/quotient.hpp"

namespace walg {

int worker_count();
// reads WALG_THREADS (positive integer); returns the thread count in effect
int configure_threads_from_env();

// OpenMP versions of the serial kernels. Results are identical to the serial ones.
AlgebraElement multiply_parallel(const AlgebraElement& a, const AlgebraElement& b);
ModuleElement fuse_parallel(const WhittakerQuotient& Q, const ModuleElement& a, const ModuleElement& b);
// witness is the first failing m-generator in m_basis order, as in the serial check
WhittakerCheck is_whittaker_parallel(const WhittakerQuotient& Q, const ModuleElement& m);

// (i, j, x, r) requests evaluated concurrently
std::vector<TGenerator> t_elements_parallel(const Pyramid& p, const std::vector<std::array<int, 4>>& req,
                                            SignConvention conv = SignConvention::IncludeTarget);

}  // namespace walg
