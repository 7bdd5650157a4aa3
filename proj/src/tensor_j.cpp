#include "walg/tensor_j.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

AlgebraElement JMatrix::entry(Pair row, Pair col) const {
  AlgebraElement r(order);
  if (row == col) r = AlgebraElement::one(order);
  auto it = entries.find({row, col});
  if (it != entries.end()) r += it->second;
  return r;
}

namespace {

ModuleElement lead(const WhittakerQuotient& Q, int i, int j) {
  return ModuleElement::tensor(AlgebraElement::one(Q.order()), {i, j});
}

}  // namespace

JComputation compute_J(int N, const JOptions& opt) {
  if (N < 2) throw ValidationError("J needs N >= 2");
  Pyramid p = Pyramid::subregular(N);
  WhittakerQuotient Q(p);
  JComputation out;
  out.exponent = resolve_t12_exponent(Q);
  out.basis = canonicalize(Q, build_tilde_basis(Q, out.exponent.chosen));
  out.J.N = N;
  out.J.order = Q.order();

  std::vector<Pair> all;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) all.push_back({i, j});
  std::vector<ModuleElement> fused(all.size());
  std::string error;
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (std::size_t k = 0; k < all.size(); ++k) {
    try {
      fused[k] = Q.fuse(out.basis[all[k].first], out.basis[all[k].second]);
    } catch (const std::exception& e) {
#pragma omp critical
      error = e.what();
    }
  }
  if (!error.empty()) throw InternalError(error);
  for (std::size_t k = 0; k < all.size(); ++k) out.fused[all[k]] = fused[k];

  // Gaussian pass: second index decreasing so every subtracted pair generator exists already
  for (int j = N; j >= 1; --j) {
    for (int i = N; i >= 1; --i) {
      ModuleElement G = out.fused.at({i, j});
      for (int guard = 0;; ++guard) {
        if (guard > 4 * N * N) throw InternalError("pair reduction did not stabilize");
        ModuleElement R = Q.reduce_mod_b_left(G);
        std::optional<Pair> pick;
        AlgebraElement c;
        for (auto& s : R.slot_tuples()) {
          Pair al{s[0], s[1]};
          if (al == Pair{i, j}) continue;
          AlgebraElement cc = l_constant_part(R.coefficient(s), Q);
          if (cc.is_zero()) continue;
          if (!pick || al.second > pick->second || (al.second == pick->second && al.first < pick->first)) {
            pick = al;
            c = cc;
          }
        }
        if (!pick) break;
        if (pick->second <= j)
          throw InternalError("fusion of v_" + std::to_string(i) + ", v_" + std::to_string(j) +
                              " has an l-constant coefficient at (" + std::to_string(pick->first) + "," +
                              std::to_string(pick->second) + ") below the triangular range");
        G -= Q.right_act(out.pairs.at(*pick), c);
        auto& slot = out.J.entries[{*pick, {i, j}}];
        if (!slot.order()) slot = AlgebraElement(Q.order());
        slot += c;
        if (slot.is_zero()) out.J.entries.erase({*pick, {i, j}});
      }
      ModuleElement R = Q.reduce_mod_b_left(G);
      if (!(R == lead(Q, i, j)))
        throw InternalError("pair generator (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not canonical: b-reduction " + R.to_string());
      if (opt.verify_pairs) {
        auto w = Q.is_whittaker(G);
        if (!w.ok)
          throw InternalError("pair generator (" + std::to_string(i) + "," + std::to_string(j) +
                              ") is not Whittaker at " + w.witness->to_string());
      }
      out.pairs[{i, j}] = std::move(G);
    }
  }
  return out;
}

JStructure check_J_structure(const JMatrix& J, const WhittakerQuotient& Q) {
  JStructure s;
  auto note = [&](const std::string& w) {
    if (s.witness.empty()) s.witness = w;
  };
  for (auto& [pos, c] : J.entries) {
    auto [al, ij] = pos;
    std::string where = "((" + std::to_string(al.first) + "," + std::to_string(al.second) + "),(" +
                        std::to_string(ij.first) + "," + std::to_string(ij.second) + "))";
    if (c.is_zero()) continue;
    if (!(al.first <= ij.first && al.second > ij.second)) {
      s.unipotent_support = false;
      note("entry outside a<=i, l>j at " + where);
    }
    if (!c.divisible_by_hbar()) {
      s.divisible = false;
      note("entry not divisible by hbar at " + where);
    }
    if (!(l_constant_part(c, Q) == c)) {
      s.in_l = false;
      note("entry outside U(l) at " + where);
    }
  }
  return s;
}

std::string xpoly_to_string(const XPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : p) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool bare = e.first == 0 && e.second == 0;
    if (a != 1 || bare) os << a.get_str();
    if (!bare && a != 1) os << "*";
    if (e.first) os << "x21" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.first && e.second) os << "*";
    if (e.second) os << "x11" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return os.str();
}

void SemiclassicalJ::add(GenIdx a, GenIdx b, std::pair<int, int> mono, const Rational& c) {
  if (c == 0) return;
  auto& poly = entries[{a, b}];
  auto& slot = poly[mono];
  slot += c;
  if (slot == 0) poly.erase(mono);
  if (poly.empty()) entries.erase({a, b});
}

SemiclassicalJ SemiclassicalJ::constant_part() const {
  SemiclassicalJ r;
  r.N = N;
  for (auto& [k, p] : entries) {
    auto it = p.find({0, 0});
    if (it != p.end()) r.add(k.first, k.second, {0, 0}, it->second);
  }
  return r;
}

SemiclassicalJ SemiclassicalJ::dynamical_part() const {
  SemiclassicalJ r;
  r.N = N;
  for (auto& [k, p] : entries)
    for (auto& [e, c] : p)
      if (e != std::pair<int, int>{0, 0}) r.add(k.first, k.second, e, c);
  return r;
}

int SemiclassicalJ::max_x_degree() const {
  int d = 0;
  for (auto& [k, p] : entries)
    for (auto& [e, c] : p) d = std::max(d, e.first + e.second);
  return d;
}

std::string SemiclassicalJ::to_string() const {
  if (entries.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, p] : entries) {
    if (!first) os << " + ";
    first = false;
    os << "(" << xpoly_to_string(p) << ")*E" << k.first.i << "," << k.first.j << "(x)E" << k.second.i << ","
       << k.second.j;
  }
  return os.str();
}

SemiclassicalJ semiclassical_limit(const JMatrix& J) {
  SemiclassicalJ s;
  s.N = J.N;
  const auto& o = *J.order;
  for (auto& [pos, c] : J.entries) {
    auto [al, ij] = pos;
    if (!c.divisible_by_hbar())
      throw InternalError("J - id is not divisible by hbar at entry (" + std::to_string(al.first) + "," +
                          std::to_string(al.second) + ")");
    for (auto& [m, poly] : c.terms()) {
      Rational c1 = poly.coeff(1);
      if (c1 == 0) continue;
      int a = 0, b = 0;
      for (char ch : m) {
        GenIdx g = o.gen(static_cast<Rank>(ch));
        if (g == GenIdx{2, 1})
          ++a;
        else if (g == GenIdx{1, 1})
          ++b;
        else
          throw InternalError("J entry outside U(l): " + c.to_string());
      }
      // matrix position ((a,l),(i,j)) is the action of E_{a,i} (x) E_{l,j}
      s.add({al.first, ij.first}, {al.second, ij.second}, {a, b}, c1);
    }
  }
  return s;
}

SemiclassicalJ from_rmatrix(int N, const RMatrixElement& r) {
  SemiclassicalJ s;
  s.N = N;
  for (auto& [k, c] : r.terms) s.add(k.first, k.second, {0, 0}, c);
  return s;
}

const char* to_string(DynamicalConvention c) { return c == DynamicalConvention::Statement ? "statement" : "proof"; }

SemiclassicalJ semiclassical_closed_form(int N, DynamicalConvention conv) {
  SemiclassicalJ s = from_rmatrix(N, jc_closed_form(N));
  auto sg = [](int k) { return Rational(k % 2 == 0 ? 1 : -1); };
  for (int j = 2; j <= N - 2; ++j)
    for (int i = j + 2; i <= N; ++i)
      for (int r = 2; r <= i - j; ++r) s.add({1, r}, {i, j}, {1, i - j - r}, sg(i - j - r));
  for (int i = 4; i <= N; ++i) {
    int rmax = conv == DynamicalConvention::Statement ? i - 2 : i - 1;
    for (int r = 2; r <= rmax; ++r) {
      int e = conv == DynamicalConvention::Statement ? i - r - 1 : i - r;
      s.add({1, r}, {i, 1}, {0, e}, sg(i - r));
    }
  }
  return s;
}

std::vector<std::string> diff_semiclassical(const SemiclassicalJ& a, const SemiclassicalJ& b) {
  std::vector<std::string> out;
  std::set<std::pair<GenIdx, GenIdx>> keys;
  for (auto& [k, p] : a.entries) keys.insert(k);
  for (auto& [k, p] : b.entries) keys.insert(k);
  for (auto& k : keys) {
    auto ia = a.entries.find(k);
    auto ib = b.entries.find(k);
    XPoly pa = ia == a.entries.end() ? XPoly{} : ia->second;
    XPoly pb = ib == b.entries.end() ? XPoly{} : ib->second;
    if (pa == pb) continue;
    out.push_back("E" + std::to_string(k.first.i) + "," + std::to_string(k.first.j) + "(x)E" +
                  std::to_string(k.second.i) + "," + std::to_string(k.second.j) + ": computed " + xpoly_to_string(pa) +
                  " vs " + xpoly_to_string(pb));
  }
  return out;
}

std::string SemiclassicalComparison::matched() const {
  if (matches_statement && matches_proof) return "both";
  if (matches_statement) return "statement";
  if (matches_proof) return "proof";
  return "neither";
}

SemiclassicalComparison compare_semiclassical(const SemiclassicalJ& computed) {
  SemiclassicalComparison c;
  c.N = computed.N;
  c.constant_matches_jc = computed.constant_part() == from_rmatrix(c.N, jc_closed_form(c.N));
  auto st = semiclassical_closed_form(c.N, DynamicalConvention::Statement);
  auto pr = semiclassical_closed_form(c.N, DynamicalConvention::Proof);
  c.diff_statement = diff_semiclassical(computed.dynamical_part(), st.dynamical_part());
  c.diff_proof = diff_semiclassical(computed.dynamical_part(), pr.dynamical_part());
  c.matches_statement = c.diff_statement.empty();
  c.matches_proof = c.diff_proof.empty();
  auto unsigned_part = [](SemiclassicalJ s) {
    for (auto& [k, p] : s.entries)
      for (auto& [e, q] : p) q = abs(q);
    return s;
  };
  SemiclassicalJ u = unsigned_part(computed.dynamical_part());
  c.statement_up_to_sign = u == unsigned_part(st.dynamical_part());
  c.proof_up_to_sign = u == unsigned_part(pr.dynamical_part());
  return c;
}

SemiclassicalJ semiclassical_from_asymptotic_parts(const WhittakerQuotient& Q, const WhittakerBasis& B) {
  int N = Q.N();
  SemiclassicalJ s;
  s.N = N;
  const auto& o = *Q.order();
  for (int j = 1; j <= N; ++j)
    for (int l = j + 1; l <= N; ++l) {
      AlgebraElement x = B[j].coefficient({l});
      auto parts = asymptotic_parts(x, Q);
      AlgebraElement P = parts.linear + parts.l_linear;
      if (P.is_zero()) continue;
      for (int i = 1; i <= N; ++i) {
        ModuleElement moved = Q.right_act(ModuleElement::tensor(AlgebraElement::one(Q.order()), {i}), P);
        ModuleElement R = Q.reduce_mod_b_left(moved);
        for (auto& sl : R.slot_tuples()) {
          AlgebraElement c = l_constant_part(R.coefficient(sl), Q);
          int a = sl[0];
          for (auto& [m, poly] : c.terms()) {
            Rational c1 = poly.coeff(1);
            if (c1 == 0) continue;
            int e21 = 0, e11 = 0;
            for (char ch : m) (o.gen(static_cast<Rank>(ch)) == GenIdx{2, 1} ? e21 : e11)++;
            s.add({a, i}, {l, j}, {e21, e11}, c1);
          }
        }
      }
    }
  return s;
}

FusionAssociativity fuse_power_J(int N, const std::vector<std::array<int, 3>>& triples) {
  Pyramid p = Pyramid::subregular(N);
  WhittakerQuotient Q(p);
  auto res = resolve_t12_exponent(Q);
  WhittakerBasis B = canonicalize(Q, build_tilde_basis(Q, res.chosen));
  FusionAssociativity f;
  for (auto [a, b, c] : triples) {
    ++f.checked;
    ModuleElement L = Q.fuse(Q.fuse(B[a], B[b]), B[c]);
    ModuleElement R = Q.fuse(B[a], Q.fuse(B[b], B[c]));
    if (!(L == R)) {
      ++f.failures;
      f.failed.push_back("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
  return f;
}

}  // namespace walg
