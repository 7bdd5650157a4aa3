#include "walg/bk_gens.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "walg/errors.hpp"

namespace walg {

namespace {

int sigma(int row, int x) { return row <= x ? -1 : 1; }

void check_indices(const Pyramid& p, int i, int j, int x, int r) {
  if (i < 1 || j < 1 || i > p.n() || j > p.n()) throw ValidationError("T indices must lie in 1..n");
  if (x < 0 || x > p.n()) throw ValidationError("sign cutoff x must lie in 0..n");
  if (r < 0) throw ValidationError("T degree r must be non-negative");
}

struct Enumerator {
  const Pyramid& p;
  int j, x;
  SignConvention conv;
  std::vector<int> cur;
  std::vector<TSequence> out;

  // choose j_k for the current i_k (last entry of cur), with `budget` degree left
  void pick_target(int budget) {
    int ik = cur.back();
    for (int jk = 1; jk <= p.N(); ++jk) {
      if (p.col(jk) < p.col(ik)) continue;
      int d = p.col(jk) - p.col(ik) + 1;
      if (d > budget) continue;
      cur.push_back(jk);
      if (d == budget) {
        if (p.row(jk) == j) emit();
      } else {
        pick_next_source(budget - d);
      }
      cur.pop_back();
    }
  }

  void pick_next_source(int budget) {
    int jk = cur.back();
    int rw = p.row(jk);
    bool plus = sigma(rw, x) > 0;
    for (int in = 1; in <= p.N(); ++in) {
      if (p.row(in) != rw) continue;
      if (plus && !(p.col(jk) < p.col(in))) continue;
      if (!plus && !(p.col(jk) >= p.col(in))) continue;
      cur.push_back(in);
      pick_target(budget);
      cur.pop_back();
    }
  }

  void emit() {
    TSequence t;
    t.blocks = cur;
    int s = t.s();
    int last = conv == SignConvention::IncludeTarget ? s : s - 1;
    for (int k = 0; k < last; ++k) t.sign *= sigma(p.row(cur[2 * k + 1]), x);
    out.push_back(std::move(t));
  }
};

struct TKey {
  std::vector<int> heights;
  int k, i, j, x, r;
  SignConvention conv;
  std::uint32_t order;
  auto tie() const { return std::tie(heights, k, i, j, x, r, conv, order); }
  bool operator<(const TKey& o) const { return tie() < o.tie(); }
};

std::mutex t_mu;
std::map<TKey, TGenerator> t_memo;

}  // namespace

std::vector<TSequence> enumerate_t_sequences(const Pyramid& p, int i, int j, int x, int r, SignConvention conv) {
  check_indices(p, i, j, x, r);
  Enumerator en{p, j, x, conv, {}, {}};
  if (r == 0) return {};
  for (int i1 = 1; i1 <= p.N(); ++i1) {
    if (p.row(i1) != i) continue;
    en.cur = {i1};
    en.pick_target(r);
  }
  std::sort(en.out.begin(), en.out.end(), [](const TSequence& a, const TSequence& b) {
    if (a.s() != b.s()) return a.s() < b.s();
    return a.blocks < b.blocks;
  });
  return en.out;
}

TGenerator truncated_t(const Pyramid& p, int k, int i, int j, int x, int r, OrderPtr o, SignConvention conv) {
  if (o->N() != p.N()) throw StructuralError("order and pyramid disagree on N");
  Pyramid tp = p.truncated(k);
  check_indices(tp, i, j, x, r);
  TKey key{p.heights(), k, i, j, x, r, conv, o->id()};
  {
    std::lock_guard<std::mutex> lock(t_mu);
    auto it = t_memo.find(key);
    if (it != t_memo.end()) return it->second;
  }
  TGenerator t;
  t.i = i, t.j = j, t.x = x, t.r = r, t.truncation = k, t.convention = conv, t.pyramid = p;
  t.value = AlgebraElement(o);
  if (r == 0) {
    if (i == j) t.value = AlgebraElement::scalar(o, HbarPoly(sigma(i, x)));
  } else {
    for (const auto& seq : enumerate_t_sequences(tp, i, j, x, r, conv)) {
      AlgebraElement prod = AlgebraElement::scalar(o, HbarPoly(seq.sign));
      for (int q = 0; q < seq.s(); ++q)
        prod = prod * modified_gen(tp, p, seq.blocks[2 * q], seq.blocks[2 * q + 1], o);
      t.value += prod;
    }
  }
  t.kazhdan_degree = kazhdan_degree(t.value, p);
  std::lock_guard<std::mutex> lock(t_mu);
  t_memo.emplace(key, t);  // identical values if another thread got here first
  return t;
}

TGenerator truncated_t(const Pyramid& p, int k, int i, int j, int x, int r, SignConvention conv) {
  return truncated_t(p, k, i, j, x, r, canonical_order(p), conv);
}

TGenerator t_element(const Pyramid& p, int i, int j, int x, int r, SignConvention conv) {
  return truncated_t(p, 0, i, j, x, r, canonical_order(p), conv);
}

AlgebraElement t1_closed_form(const Pyramid& p, int i, int j, int x, SignConvention conv) {
  check_indices(p, i, j, x, 1);
  OrderPtr o = canonical_order(p);
  AlgebraElement r(o);
  for (int h = 1; h <= p.N(); ++h)
    for (int k = 1; k <= p.N(); ++k)
      if (p.col(h) == p.col(k) && p.row(h) == i && p.row(k) == j) r += modified_gen(p, h, k, o);
  if (conv == SignConvention::IncludeTarget && sigma(j, x) < 0) r *= Rational(-1);
  return r;
}

std::vector<TGenerator> subregular_w_generators(int N) {
  Pyramid p = Pyramid::subregular(N);
  std::vector<TGenerator> v;
  v.push_back(t_element(p, 1, 1, 0, 1));
  v.push_back(t_element(p, 2, 1, 1, 1));
  v.push_back(t_element(p, 1, 2, 1, N - 1));
  for (int r = 1; r <= N - 1; ++r) v.push_back(t_element(p, 2, 2, 1, r));
  return v;
}

void clear_t_cache() {
  std::lock_guard<std::mutex> lock(t_mu);
  t_memo.clear();
}

std::size_t t_cache_size() {
  std::lock_guard<std::mutex> lock(t_mu);
  return t_memo.size();
}

}  // namespace walg
