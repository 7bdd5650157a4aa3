#include "walg/whittaker.hpp"

#include <algorithm>

#include "walg/errors.hpp"

namespace walg {

int t12_degree(T12Exponent e, int N, int i) { return e == T12Exponent::Short ? N - i - 2 : N - i - 1; }

const char* to_string(T12Exponent e) { return e == T12Exponent::Short ? "N-i-2" : "N-i-1"; }

namespace {
void require_subregular(const WhittakerQuotient& Q) {
  if (!Q.pyramid().is_subregular()) throw UnsupportedError("Whittaker vectors are built for subregular pyramids only");
}
HbarPoly sign(int k) { return HbarPoly(k % 2 == 0 ? 1 : -1); }
}  // namespace

ModuleElement tilde_v_unchecked(const WhittakerQuotient& Q, int j, T12Exponent e) {
  require_subregular(Q);
  const Pyramid& p = Q.pyramid();
  int N = p.N();
  if (j < 0 || j > N - 1) throw ValidationError("tilde_v index j must lie in 0..N-1");
  OrderPtr o = Q.order();
  ModuleElement v = ModuleElement::tensor(AlgebraElement::one(o), {N - j});
  if (N - j != 1) {
    for (int i = 0; i < j; ++i) {
      auto T = truncated_t(p, i + 1, 2, 2, 1, j - i, o).value;
      v += ModuleElement::tensor(T.scaled(sign(j - i)), {N - i});
    }
  } else {
    for (int i = 0; i <= N - 3; ++i) {
      int d = t12_degree(e, N, i);
      // the truncated pyramid has N-i-1 blocks, so degree stays within range
      auto T = truncated_t(p, i + 1, 1, 2, 1, d, o).value;
      v += ModuleElement::tensor(T.scaled(sign(d)), {N - i});
    }
  }
  return Q.reduce(v);
}

ModuleElement build_tilde_v(const WhittakerQuotient& Q, int j, T12Exponent e) {
  ModuleElement v = tilde_v_unchecked(Q, j, e);
  auto w = Q.is_whittaker(v);
  if (!w.ok)
    throw InternalError("v~_" + std::to_string(Q.N() - j) + " is not Whittaker: " + w.witness->to_string() +
                        " leaves " + w.residue.to_string());
  return v;
}

ExponentResolution resolve_t12_exponent(const WhittakerQuotient& Q) {
  ExponentResolution r;
  int j = Q.N() - 1;
  auto a = Q.is_whittaker(tilde_v_unchecked(Q, j, T12Exponent::Short));
  auto b = Q.is_whittaker(tilde_v_unchecked(Q, j, T12Exponent::Long));
  r.short_ok = a.ok;
  r.long_ok = b.ok;
  if (a.ok) {
    r.chosen = T12Exponent::Short;
    if (!b.ok) r.witness = "N-i-1 fails at " + b.witness->to_string() + ": " + b.residue.to_string();
  } else if (b.ok) {
    r.chosen = T12Exponent::Long;
    r.witness = "N-i-2 fails at " + a.witness->to_string() + ": " + a.residue.to_string();
  } else {
    throw InternalError("neither exponent gives a Whittaker v~_1");
  }
  return r;
}

WhittakerBasis build_tilde_basis(const WhittakerQuotient& Q, T12Exponent e) {
  WhittakerBasis B;
  B.N = Q.N();
  B.exponent = e;
  B.vectors.resize(B.N);
  for (int j = 0; j <= B.N - 1; ++j) B.vectors[B.N - j - 1] = build_tilde_v(Q, j, e);
  return B;
}

AlgebraElement l_constant_part(const AlgebraElement& x, const WhittakerQuotient& Q) {
  AlgebraElement r(x.order());
  for (auto& [m, c] : x.terms()) {
    bool only_l = std::all_of(m.begin(), m.end(), [&](char ch) { return Q.in_l(static_cast<Rank>(ch)); });
    if (only_l) r.add_term(m, c);
  }
  return r;
}

AsymptoticParts asymptotic_parts(const AlgebraElement& x, const WhittakerQuotient& Q) {
  AsymptoticParts a{AlgebraElement(x.order()), AlgebraElement(x.order())};
  for (auto& [m, c] : x.terms()) {
    Rational c0 = c.coeff(0);
    if (c0 == 0) continue;
    if (m.size() == 1) a.linear.add_term(m, HbarPoly(c0));
    if (m.size() >= 2 && Q.in_b(static_cast<Rank>(m[0])) &&
        std::all_of(m.begin() + 1, m.end(), [&](char ch) { return Q.in_l(static_cast<Rank>(ch)); }))
      a.l_linear.add_term(m, HbarPoly(c0));
  }
  return a;
}

bool is_canonical_vector(const WhittakerQuotient& Q, const ModuleElement& v, int i) {
  ModuleElement lead = ModuleElement::tensor(AlgebraElement::one(Q.order()), {i});
  return Q.reduce_mod_b_left(v) == lead;
}

WhittakerBasis canonicalize(const WhittakerQuotient& Q, const WhittakerBasis& tilde) {
  WhittakerBasis B = tilde;
  B.canonical = true;
  B.corrections.clear();
  int N = B.N;
  for (int i = N; i >= 1; --i) {
    ModuleElement& w = B.vectors[i - 1];
    for (int pass = 0; pass < N + 1; ++pass) {
      bool changed = false;
      for (int k = N; k > i; --k) {
        AlgebraElement c = l_constant_part(w.coefficient({k}), Q);
        if (c.is_zero()) continue;
        w -= Q.right_act(B.vectors[k - 1], c);
        B.corrections[{i, k}] += c;
        changed = true;
      }
      if (!changed) break;
    }
    if (!is_canonical_vector(Q, w, i))
      throw InternalError("canonical form of v_" + std::to_string(i) + " has a coefficient outside b.U(g): " +
                          Q.reduce_mod_b_left(w).to_string());
  }
  return B;
}

bool in_truncated_borel_ideal(const AlgebraElement& x, int J) {
  if (x.is_zero()) return true;
  int N = x.N();
  std::vector<GenIdx> first, rest;
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l <= N; ++l) {
      bool in = k <= l && l <= J && l >= 2;
      (in ? first : rest).push_back({k, l});
    }
  int nb = static_cast<int>(first.size());
  if (nb == 0) return false;
  first.insert(first.end(), rest.begin(), rest.end());
  OrderPtr o = GeneratorOrder::from_sequence(N, first);
  AlgebraElement y = x.convert(o);
  for (auto& [m, c] : y.terms())
    if (m.empty() || static_cast<Rank>(m[0]) >= nb) return false;
  return true;
}

}  // namespace walg

namespace walg {

RecursionCheck check_t_recursion(const WhittakerQuotient& Q, SignConvention conv) {
  const Pyramid& p = Q.pyramid();
  if (!p.is_subregular()) throw UnsupportedError("the T recursion is stated for subregular pyramids");
  int N = p.N();
  if (N < 4) throw ValidationError("the T recursion needs N >= 4 (two truncations)");
  auto o = Q.order();
  auto tk = [&](int k, int i, int r) {
    if (r == 0) return i == 2 ? AlgebraElement::one(o) : AlgebraElement(o);
    return truncated_t(p, k, i, 2, 1, r, o, conv).value;
  };
  auto q = [&](const AlgebraElement& a) { return Q.reduce(ModuleElement::tensor(a, {})); };
  AlgebraElement e_diag = modified_gen(p, N - 1, N - 1, o);
  AlgebraElement e_up = modified_gen(p, N - 2, N - 1, o);
  RecursionCheck rc;
  for (int i = 1; i <= 2; ++i)
    for (int r = 1; r <= N - 1; ++r) {
      ++rc.checked;
      AlgebraElement t1 = tk(1, i, r), t2 = tk(2, i, r), t2m = tk(2, i, r - 1);
      AlgebraElement rhs = t2 + t2m * e_diag + commutator(t2m, e_up);
      std::string tag = "i=" + std::to_string(i) + " r=" + std::to_string(r);
      ModuleElement q1 = q(t1);
      if (!(q1 == q(rhs))) {
        ++rc.relation_failures;
        rc.failed.push_back("relation " + tag);
      }
      if (!(Q.ad_action({N, N - 1}, q1) == q(t2m))) {
        ++rc.adjoint_failures;
        rc.failed.push_back("ad E_{N,N-1} " + tag);
      }
    }
  return rc;
}

}  // namespace walg

namespace walg {

AlgebraElement linear_part_formula(const Pyramid& p, int k, int i, int j, int x, int r, OrderPtr o,
                                   bool with_target_sign) {
  Pyramid tp = p.truncated(k);
  AlgebraElement out(o);
  for (int h = 1; h <= tp.N(); ++h)
    for (int l = 1; l <= tp.N(); ++l)
      if (tp.row(h) == i && tp.row(l) == j && tp.col(l) - tp.col(h) + 1 == r)
        out += AlgebraElement::gen(o, h, l);
  int s = (r - 1) % 2 == 0 ? 1 : -1;
  if (with_target_sign && j <= x) s = -s;
  out *= Rational(s);
  return out;
}

AlgebraElement l_linear_t22_formula(int d, OrderPtr o, bool displayed_sign) {
  AlgebraElement out(o);
  for (int r = 2; r <= d; ++r) {
    std::vector<GenIdx> w{{1, r}, {2, 1}};
    for (int e = 0; e < d - r; ++e) w.push_back({1, 1});
    int s = displayed_sign ? (r % 2 == 0 ? 1 : -1) : (d % 2 == 1 ? 1 : -1);
    out += AlgebraElement::from_word(o, w, HbarPoly(s));
  }
  return out.hbar_coefficient(0);
}

AlgebraElement l_linear_t12_formula(int d, OrderPtr o, bool displayed_sign) {
  AlgebraElement out(o);
  for (int r = 2; r <= d - 1; ++r) {
    std::vector<GenIdx> w{{1, r}};
    for (int e = 0; e < d - r; ++e) w.push_back({1, 1});
    // the alternative sign is that of the N-i-2 family, (-1)^{(d-1)+1}
    int s = displayed_sign ? (r % 2 == 0 ? 1 : -1) : (d % 2 == 0 ? 1 : -1);
    out += AlgebraElement::from_word(o, w, HbarPoly(s));
  }
  return out.hbar_coefficient(0);
}

AsymptoticFormCheck check_asymptotic_forms(const WhittakerQuotient& Q, SignConvention conv) {
  require_subregular(Q);
  const Pyramid& p = Q.pyramid();
  int N = p.N();
  auto o = Q.order();
  AsymptoticFormCheck c;
  c.N = N;
  auto linear = [&](int k, int i, int j, int r) {
    AlgebraElement got = asymptotic_parts(truncated_t(p, k, i, j, 1, r, o, conv).value, Q).linear;
    ++c.linear_checked;
    bool lit = got == linear_part_formula(p, k, i, j, 1, r, o, false);
    if (lit) ++c.linear_literal;
    else
      c.mismatches.push_back("linear _" + std::to_string(k) + "T" + std::to_string(i) + std::to_string(j) + "^(" +
                             std::to_string(r) + "): " + got.to_string());
    if (got == linear_part_formula(p, k, i, j, 1, r, o, true)) ++c.linear_target_sign;
  };
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i > 2 || j > 2) continue;  // rows of the subregular pyramid
      for (int r = 1; r <= N; ++r) linear(0, i, j, r);
    }
  for (int jj = 1; jj <= N - 1; ++jj)
    for (int i = 0; i <= jj - 1; ++i) {
      if (N - jj == 1) continue;
      int d = jj - i;
      linear(i + 1, 2, 2, d);
      AlgebraElement got = asymptotic_parts(truncated_t(p, i + 1, 2, 2, 1, d, o, conv).value, Q).l_linear;
      ++c.t22_checked;
      if (got == l_linear_t22_formula(d, o, true)) ++c.t22_displayed;
      else
        c.mismatches.push_back("l-linear _" + std::to_string(i + 1) + "T22^(" + std::to_string(d) + "): " + got.to_string());
      if (got == l_linear_t22_formula(d, o, false)) ++c.t22_alt_sign;
    }
  for (int i = 0; i <= N - 3; ++i) {
    int dp = N - i - 1, dt = N - i - 2;
    linear(i + 1, 1, 2, dt);
    AlgebraElement want = l_linear_t12_formula(dp, o, true);
    AlgebraElement got_p = asymptotic_parts(truncated_t(p, i + 1, 1, 2, 1, dp, o, conv).value, Q).l_linear;
    AlgebraElement got_t = asymptotic_parts(truncated_t(p, i + 1, 1, 2, 1, dt, o, conv).value, Q).l_linear;
    ++c.t12_checked;
    if (got_p == want) ++c.t12_long_displayed;
    if (got_t == want) ++c.t12_short_displayed;
    if (got_t == l_linear_t12_formula(dp, o, false)) ++c.t12_short_alt_sign;
    if (!(got_p == want) && !(got_t == want))
      c.mismatches.push_back("l-linear _" + std::to_string(i + 1) + "T12 (N-i-1: " + got_p.to_string() +
                             "; N-i-2: " + got_t.to_string() + ")");
  }
  return c;
}

}  // namespace walg
