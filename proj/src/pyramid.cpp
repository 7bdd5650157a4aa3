#include "walg/pyramid.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

Pyramid Pyramid::from_heights(const std::vector<int>& q) {
  if (q.empty()) throw ValidationError("pyramid needs at least one column");
  for (int h : q)
    if (h <= 0) throw ValidationError("pyramid heights must be positive");
  std::size_t k = 0;
  while (k + 1 < q.size() && q[k] <= q[k + 1]) ++k;
  for (std::size_t t = k; t + 1 < q.size(); ++t)
    if (q[t] < q[t + 1]) throw ValidationError("pyramid heights must be unimodal");
  Pyramid p;
  p.q_ = q;
  p.n_ = *std::max_element(q.begin(), q.end());
  for (std::size_t c = 0; c < q.size(); ++c) {
    for (int r = p.n_ - q[c] + 1; r <= p.n_; ++r) {
      p.row_.push_back(r);
      p.col_.push_back(static_cast<int>(c) + 1);
    }
  }
  p.N_ = static_cast<int>(p.row_.size());
  if (p.N_ > kMaxN) throw ValidationError("pyramid too large: N=" + std::to_string(p.N_));
  return p;
}

Pyramid Pyramid::subregular(int N) {
  if (N < 2) throw ValidationError("subregular pyramid needs N >= 2");
  std::vector<int> q{2};
  q.resize(N - 1, 1);
  return from_heights(q);
}

Pyramid Pyramid::parse(const std::string& s) {
  try {
    if (s.rfind("subreg:", 0) == 0) {
      std::size_t used = 0;
      int N = std::stoi(s.substr(7), &used);
      if (used != s.size() - 7) throw ValidationError("");
      return subregular(N);
    }
    std::vector<int> q;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      q.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ValidationError("");
    }
    return from_heights(q);
  } catch (const ValidationError& e) {
    if (std::string(e.what()).empty()) throw ValidationError("bad pyramid literal: '" + s + "'");
    throw;
  } catch (const std::exception&) {
    throw ValidationError("bad pyramid literal: '" + s + "'");
  }
}

int Pyramid::block_at(int r, int c) const {
  for (int b = 1; b <= N_; ++b)
    if (row_[b - 1] == r && col_[b - 1] == c) return b;
  return 0;
}

int Pyramid::rho(int c) const {
  int s = 0;
  for (int k = c; k <= columns(); ++k) s += q_[k - 1];
  return n_ - s;
}

Pyramid Pyramid::truncated(int k) const {
  if (k < 0 || k >= columns()) throw ValidationError("truncation depth must be below the column count");
  return from_heights(std::vector<int>(q_.begin(), q_.end() - k));
}

bool Pyramid::is_subregular() const {
  if (q_[0] != 2) return false;
  for (std::size_t c = 1; c < q_.size(); ++c)
    if (q_[c] != 1) return false;
  return true;
}

std::string Pyramid::spec() const {
  std::string s;
  for (std::size_t c = 0; c < q_.size(); ++c) s += (c ? "," : "") + std::to_string(q_[c]);
  return s;
}

OrderPtr parabolic_order(const Pyramid& p) {
  std::vector<GenIdx> first, last;
  for (int i = 1; i <= p.N(); ++i)
    for (int j = 1; j <= p.N(); ++j) (p.degree(i, j) >= 0 ? first : last).push_back({i, j});
  first.insert(first.end(), last.begin(), last.end());
  return GeneratorOrder::from_sequence(p.N(), first);
}

namespace {
OrderPtr build_canonical_order(const Pyramid& p) {
  if (!p.is_subregular()) return parabolic_order(p);
  int N = p.N();
  std::vector<GenIdx> seq;
  for (int k = 1; k <= N; ++k)  // b
    for (int l = 2; l <= N - 1; ++l)
      if (k <= l) seq.push_back({k, l});
  std::sort(seq.begin(), seq.end());
  seq.push_back({2, 1});  // l: E21 before E11
  seq.push_back({1, 1});
  for (int i = 1; i <= N; ++i) seq.push_back({i, N});
  for (int i = 3; i <= N; ++i)
    for (int j = 1; j < i; ++j) seq.push_back({i, j});
  return GeneratorOrder::from_sequence(N, seq);
}
}  // namespace

// one shared instance per pyramid so that caches keyed by order identity are reused
OrderPtr canonical_order(const Pyramid& p) {
  static std::mutex mu;
  static std::map<std::vector<int>, OrderPtr> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = memo[p.heights()];
  if (!slot) slot = build_canonical_order(p);
  return slot;
}

AlgebraElement nilpotent_e(const Pyramid& p, OrderPtr o) {
  AlgebraElement e(o);
  for (int i = 1; i <= p.N(); ++i)
    for (int j = 1; j <= p.N(); ++j)
      if (p.row(i) == p.row(j) && p.col(j) == p.col(i) + 1) e += AlgebraElement::gen(o, i, j);
  return e;
}

Subalgebras subalgebras(const Pyramid& p) {
  Subalgebras s;
  for (int i = 1; i <= p.N(); ++i)
    for (int j = 1; j <= p.N(); ++j) (p.degree(i, j) < 0 ? s.m : s.p).push_back({i, j});
  return s;
}

CharacterPsi::CharacterPsi(const Pyramid& p) {
  for (int i = 1; i <= p.N(); ++i)
    for (int j = 1; j <= p.N(); ++j) {
      if (p.degree(i, j) >= 0) continue;
      // Tr(e E_ij) is the coefficient of E_ji in e
      bool hit = p.row(i) == p.row(j) && p.col(i) == p.col(j) + 1;
      values_[{i, j}] = hit ? 1 : 0;
    }
}

Rational CharacterPsi::operator()(int i, int j) const {
  auto it = values_.find({i, j});
  if (it == values_.end()) throw ValidationError("psi evaluated outside m at E" + std::to_string(i) + "," + std::to_string(j));
  return it->second;
}

AlgebraElement modified_gen(const Pyramid& p, int i, int j, OrderPtr o) { return modified_gen(p, p, i, j, std::move(o)); }

AlgebraElement modified_gen(const Pyramid& p, const Pyramid& src, int i, int j, OrderPtr o) {
  if (i < 1 || j < 1 || i > p.N() || j > p.N()) throw ValidationError("index outside pyramid");
  AlgebraElement r = AlgebraElement::gen(o, i, j);
  if (i == j) r += AlgebraElement::scalar(o, HbarPoly::monomial(src.rho(src.col(i)), 1));
  if ((p.col(j) - p.col(i)) % 2 != 0) r *= Rational(-1);
  return r;
}

namespace {
int term_degree(const GeneratorOrder& o, const Pyramid& p, const Monomial& m) {
  int d = 0;
  for (char ch : m) {
    GenIdx g = o.gen(static_cast<Rank>(ch));
    d += p.col(g.j) - p.col(g.i) + 1;
  }
  return d;
}
}  // namespace

int kazhdan_degree(const AlgebraElement& a, const Pyramid& p) {
  if (a.N() != p.N() && !a.is_zero()) throw StructuralError("element and pyramid disagree on N");
  int best = kNegInfDegree;
  for (auto& [m, c] : a.terms()) best = std::max(best, term_degree(*a.order(), p, m) + c.degree());
  return best;
}

AlgebraElement kazhdan_component(const AlgebraElement& a, const Pyramid& p, int d) {
  AlgebraElement r(a.order());
  for (auto& [m, c] : a.terms()) {
    int k = d - term_degree(*a.order(), p, m);
    if (k >= 0 && c.coeff(k) != 0) r.add_term(m, HbarPoly::monomial(c.coeff(k), k));
  }
  return r;
}

}  // namespace walg
