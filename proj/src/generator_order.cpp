#include "walg/generator_order.hpp"

#include <atomic>
#include <cstdio>
#include <map>

#include "walg/errors.hpp"

namespace walg {

std::string GenIdx::to_string() const { return "E" + std::to_string(i) + "," + std::to_string(j); }

namespace {
std::atomic<std::uint32_t> next_id{1};
}

OrderPtr GeneratorOrder::from_sequence(int N, const std::vector<GenIdx>& seq) {
  if (N < 1 || N > kMaxN) throw ValidationError("N out of range: " + std::to_string(N));
  if (static_cast<int>(seq.size()) != N * N) throw ValidationError("generator order must list N^2 units");
  auto o = std::shared_ptr<GeneratorOrder>(new GeneratorOrder());
  o->N_ = N;
  o->rank_.assign(N * N, 255);
  o->gen_ = seq;
  for (int r = 0; r < N * N; ++r) {
    auto g = seq[r];
    if (g.i < 1 || g.i > N || g.j < 1 || g.j > N) throw ValidationError("unit out of range: " + g.to_string());
    auto& slot = o->rank_[(g.i - 1) * N + (g.j - 1)];
    if (slot != 255) throw ValidationError("unit listed twice: " + g.to_string());
    slot = static_cast<Rank>(r);
  }
  int S = N * N;
  o->br_.resize(S * S);
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b) {
      // [E_ij, E_kl] = d_jk E_il - d_li E_kj
      auto [i, j] = seq[a];
      auto [k, l] = seq[b];
      std::map<Rank, int> acc;
      if (j == k) acc[o->rank(i, l)] += 1;
      if (l == i) acc[o->rank(k, j)] -= 1;
      for (auto [r, c] : acc)
        if (c != 0) o->br_[a * S + b].push_back({r, c});
    }
  o->id_ = next_id.fetch_add(1);
  return o;
}

OrderPtr GeneratorOrder::lexicographic(int N) {
  std::vector<GenIdx> seq;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) seq.push_back({i, j});
  return from_sequence(N, seq);
}

std::string GeneratorOrder::fingerprint() const {
  // FNV-1a over the sequence
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](unsigned v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(N_);
  for (auto g : gen_) {
    mix(g.i);
    mix(g.j);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "N%d-%016llx", N_, static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace walg
