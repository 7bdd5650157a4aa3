#include "walg/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

#include "walg/errors.hpp"

namespace walg {

int worker_count() { return omp_get_max_threads(); }

int configure_threads_from_env() {
  const char* s = std::getenv("WALG_THREADS");
  if (s && *s) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw ValidationError(std::string("WALG_THREADS must be a positive integer, got '") + s + "'");
    omp_set_num_threads(static_cast<int>(v));
  }
  return omp_get_max_threads();
}

namespace {

template <class Map>
void merge_into(Map& dst, Map&& src) {
  for (auto& [k, c] : src) add_to(dst, k, c);
}

}  // namespace

AlgebraElement multiply_parallel(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.order() || !b.order() || !a.order()->same_as(*b.order()))
    throw StructuralError("multiply: operands live in different generator orders");
  auto ta = a.sorted_terms();
  auto tb = b.sorted_terms();
  const GeneratorOrder& o = *a.order();
  int T = omp_get_max_threads();
  std::vector<TermMap> part(T);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t x = 0; x < ta.size(); ++x) {
    TermMap& acc = part[omp_get_thread_num()];
    for (auto& [mb, cb] : tb) mul_mono_mono(o, ta[x].first, mb, ta[x].second * cb, acc);
  }
  TermMap out;
  for (auto& p : part) merge_into(out, std::move(p));
  return AlgebraElement(a.order(), std::move(out));
}

ModuleElement fuse_parallel(const WhittakerQuotient& Q, const ModuleElement& a, const ModuleElement& b) {
  int ta = a.t(), tb = b.t();
  std::unordered_map<Monomial, std::vector<std::pair<std::string, HbarPoly>>> by_mono;
  for (auto& [k, c] : b.terms()) by_mono[b.mono(k)].emplace_back(k.substr(0, tb), c);
  std::vector<const std::pair<const Monomial, std::vector<std::pair<std::string, HbarPoly>>>*> groups;
  for (auto& g : by_mono) groups.push_back(&g);
  int T = omp_get_max_threads();
  std::vector<ModTermMap> part(T);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t x = 0; x < groups.size(); ++x) {
    auto& [y, tails] = *groups[x];
    ModTermMap moved;
    for (auto& [k, c] : a.terms()) Q.transport(k, c, y, ta, moved);
    ModTermMap& acc = part[omp_get_thread_num()];
    for (auto& [k, c] : moved) {
      std::string sa = k.substr(0, ta);
      std::string mono = k.substr(ta);
      for (auto& [sb, cb] : tails) add_product_to(acc, sa + sb + mono, c, cb, 0);
    }
  }
  ModuleElement raw(Q.order(), ta + tb);
  for (auto& p : part) merge_into(raw.mutable_terms(), std::move(p));
  return Q.reduce(raw);
}

WhittakerCheck is_whittaker_parallel(const WhittakerQuotient& Q, const ModuleElement& m) {
  const auto& basis = Q.m_basis();
  std::vector<ModuleElement> res(basis.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t x = 0; x < basis.size(); ++x) res[x] = Q.ad_action(basis[x], m);
  WhittakerCheck w;
  for (std::size_t x = 0; x < basis.size(); ++x) {
    ++w.checked;
    if (!res[x].is_zero()) {
      w.ok = false;
      w.witness = basis[x];
      w.residue = res[x];
      break;
    }
  }
  return w;
}

std::vector<TGenerator> t_elements_parallel(const Pyramid& p, const std::vector<std::array<int, 4>>& req,
                                            SignConvention conv) {
  std::vector<TGenerator> out(req.size());
  canonical_order(p);  // warm the memo before the threads race for it
#pragma omp parallel for schedule(dynamic)
  for (std::size_t x = 0; x < req.size(); ++x) out[x] = t_element(p, req[x][0], req[x][1], req[x][2], req[x][3], conv);
  return out;
}

}  // namespace walg
