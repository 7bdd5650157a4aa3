#include <unordered_map>

#include "walg/algebra.hpp"

namespace walg {

namespace {

using Expansion = std::vector<std::pair<Monomial, HbarPoly>>;

struct Cache {
  std::unordered_map<std::uint32_t, std::unordered_map<std::string, Expansion>> by_order;
  std::size_t entries = 0;
  int depth = 0;
};

thread_local Cache cache;
constexpr std::size_t kCacheLimit = 4'000'000;

const Expansion& expansion(const GeneratorOrder& o, const Monomial& m, Rank g);

Expansion compute(const GeneratorOrder& o, const Monomial& m, Rank g) {
  // m = p x with x > g:  p x g = (p g) x + hbar p [x,g]
  TermMap out;
  Monomial p = m.substr(0, m.size() - 1);
  Rank x = static_cast<Rank>(m.back());
  TermMap pg;
  mul_mono_gen(o, p, g, HbarPoly(1), 0, pg);
  for (auto& [q, c] : pg) mul_mono_gen(o, q, x, c, 0, out);
  for (auto [h, c] : o.bracket(x, g)) mul_mono_gen(o, p, h, HbarPoly(c), 1, out);
  Expansion e(out.begin(), out.end());
  return e;
}

const Expansion& expansion(const GeneratorOrder& o, const Monomial& m, Rank g) {
  auto& table = cache.by_order[o.id()];
  std::string key = m;
  key.push_back(static_cast<char>(g));
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  Expansion e = compute(o, m, g);
  ++cache.entries;
  return table.emplace(std::move(key), std::move(e)).first->second;
}

struct DepthGuard {
  DepthGuard() {
    if (cache.depth == 0 && cache.entries > kCacheLimit) {
      cache.by_order.clear();
      cache.entries = 0;
    }
    ++cache.depth;
  }
  ~DepthGuard() { --cache.depth; }
};

}  // namespace

void clear_normal_order_cache() {
  if (cache.depth != 0) return;
  cache.by_order.clear();
  cache.entries = 0;
}

std::size_t normal_order_cache_size() { return cache.entries; }

void mul_mono_gen(const GeneratorOrder& o, const Monomial& m, Rank g, const HbarPoly& c, int shift, TermMap& acc) {
  if (c.is_zero()) return;
  if (m.empty() || static_cast<Rank>(m.back()) <= g) {
    Monomial r = m;
    r.push_back(static_cast<char>(g));
    add_scaled_to(acc, r, c, 1, shift);
    return;
  }
  DepthGuard guard;
  const Expansion& e = expansion(o, m, g);
  for (auto& [q, d] : e) add_product_to(acc, q, c, d, shift);
}

void mul_mono_mono(const GeneratorOrder& o, const Monomial& a, const Monomial& b, const HbarPoly& c, TermMap& acc) {
  if (c.is_zero()) return;
  if (a.empty() || b.empty() || static_cast<Rank>(a.back()) <= static_cast<Rank>(b.front())) {
    add_scaled_to(acc, a + b, c, 1, 0);
    return;
  }
  DepthGuard guard;
  TermMap cur;
  cur.emplace(a, HbarPoly(1));
  for (char ch : b) {
    TermMap next;
    for (auto& [q, d] : cur) mul_mono_gen(o, q, static_cast<Rank>(ch), d, 0, next);
    cur.swap(next);
  }
  for (auto& [q, d] : cur) add_product_to(acc, q, c, d, 0);
}

void normal_order_word(const GeneratorOrder& o, const std::vector<Rank>& word, const HbarPoly& c, TermMap& acc) {
  if (c.is_zero()) return;
  DepthGuard guard;
  TermMap cur;
  cur.emplace(Monomial(), c);
  for (Rank g : word) {
    TermMap next;
    for (auto& [q, d] : cur) mul_mono_gen(o, q, g, d, 0, next);
    cur.swap(next);
  }
  for (auto& [q, d] : cur) add_to(acc, q, d);
}

}  // namespace walg
