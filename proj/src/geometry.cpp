#include "walg/geometry.hpp"

#include <sstream>

#include "walg/errors.hpp"

namespace walg {

int WonderbolicBasis::index(GenIdx g) const {
  for (std::size_t k = 0; k < w_basis.size(); ++k)
    if (w_basis[k] == g) return static_cast<int>(k);
  return -1;
}

WonderbolicBasis wonderbolic_basis(int N) {
  if (N < 3) throw ValidationError("wonderbolic subspace needs N >= 3");
  WonderbolicBasis w;
  w.N = N;
  for (int i = 3; i <= N; ++i)
    for (int j = 1; j < i; ++j) w.m_basis.push_back({i, j});
  for (int k = 1; k <= N - 1; ++k)
    for (int l = std::max(k, 2); l <= N - 1; ++l) w.b_basis.push_back({k, l});
  w.w_basis = w.m_basis;
  w.w_basis.insert(w.w_basis.end(), w.b_basis.begin(), w.b_basis.end());
  return w;
}

bool in_wonderbolic(int N, const std::vector<std::pair<GenIdx, Rational>>& x) {
  auto w = wonderbolic_basis(N);
  for (auto& [g, c] : x)
    if (c != 0 && w.index(g) < 0) return false;
  return true;
}

namespace {
// Tr(e E_ab) with e = E23 + ... + E_{N-1,N}
int trace_e(int N, int a, int b) { return (a == b + 1 && b >= 2 && a <= N) ? 1 : 0; }
}  // namespace

Rational omega(int N, GenIdx x, GenIdx y) {
  // [E_ij, E_kl] = d_jk E_il - d_li E_kj
  int v = 0;
  if (x.j == y.i) v += trace_e(N, x.i, y.j);
  if (y.j == x.i) v -= trace_e(N, y.i, x.j);
  return v;
}

RationalMatrix omega_matrix(const WonderbolicBasis& w) {
  std::size_t n = w.w_basis.size();
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m[a][b] = omega(w.N, w.w_basis[a], w.w_basis[b]);
  return m;
}

Rational determinant(RationalMatrix a) {
  std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

void RMatrixElement::add(GenIdx a, GenIdx b, const Rational& c) {
  if (c == 0) return;
  auto& slot = terms[{a, b}];
  slot += c;
  if (slot == 0) terms.erase({a, b});
}

RMatrixElement RMatrixElement::flipped() const {
  RMatrixElement r;
  for (auto& [k, c] : terms) r.add(k.second, k.first, c);
  return r;
}

RMatrixElement RMatrixElement::operator-(const RMatrixElement& o) const {
  RMatrixElement r = *this;
  for (auto& [k, c] : o.terms) r.add(k.first, k.second, -c);
  return r;
}

std::string RMatrixElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << "E" << k.first.i << "," << k.first.j << "(x)E" << k.second.i << "," << k.second.j;
  }
  return os.str();
}

RMatrixElement jc21_recursive(int N, RecursionSign s) {
  if (N < 3) throw ValidationError("j_c needs N >= 3");
  // images j^21(E*_ij) as combinations of b-units, built for j = 1, 2 first
  std::map<GenIdx, std::map<GenIdx, Rational>> img;
  for (int j = 1; j <= N - 1; ++j)
    for (int i = std::max(3, j + 1); i <= N; ++i) {
      std::map<GenIdx, Rational> v;
      if (j <= 2) {
        if (i > 2) v[{j, i - 1}] += 1;
      } else {
        v[{j, i - 1}] += 1;
        int sg = s == RecursionSign::Derived ? 1 : -1;
        for (auto& [g, c] : img.at({i - 1, j - 1})) v[g] += sg * c;
      }
      img[{i, j}] = v;
    }
  RMatrixElement r;
  for (auto& [mi, v] : img)
    for (auto& [g, c] : v) r.add(mi, g, c);
  return r;
}

RMatrixElement jc_recursive(int N, RecursionSign s) { return jc21_recursive(N, s).flipped(); }

RMatrixElement jc_closed_form(int N) {
  if (N < 3) throw ValidationError("j_c needs N >= 3");
  RMatrixElement r;
  for (int j = 2; j <= N - 1; ++j)
    for (int i = j + 1; i <= N; ++i)
      for (int l = 2; l <= j; ++l) r.add({l, l + i - j - 1}, {i, j}, 1);
  for (int i = 3; i <= N; ++i) r.add({1, i - 1}, {i, 1}, 1);
  return r;
}

InverseReport verify_inverse(int N, RecursionSign s) {
  InverseReport rep;
  auto w = wonderbolic_basis(N);
  auto om = omega_matrix(w);
  std::size_t nm = w.m_basis.size(), n = w.w_basis.size();
  rep.det = determinant(om);
  rep.nondegenerate = rep.det != 0;
  rep.m_isotropic = rep.b_isotropic = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a < nm && b < nm && om[a][b] != 0) rep.m_isotropic = false;
      if (a >= nm && b >= nm && om[a][b] != 0) rep.b_isotropic = false;
    }
  RMatrixElement rec = jc_recursive(N, s), closed = jc_closed_form(N);
  rep.recursive_equals_closed = rec == closed;
  if (!rep.recursive_equals_closed) rep.diff = "recursive - closed = " + (rec - closed).to_string();
  RMatrixElement r = closed - closed.flipped();
  rep.antisymmetric = (r - (RMatrixElement() - r.flipped())).terms.empty();
  // R[a][b]: coefficient of w_a (x) w_b ; r(omega(x)) = sum_a,b omega(x, w_a) R[a][b] w_b
  RationalMatrix R(n, std::vector<Rational>(n));
  bool inside = true;
  for (auto& [k, c] : r.terms) {
    int a = w.index(k.first), b = w.index(k.second);
    if (a < 0 || b < 0) {
      inside = false;
      continue;
    }
    R[a][b] = c;
  }
  rep.inverse_ok = inside;
  for (std::size_t x = 0; x < n && rep.inverse_ok; ++x)
    for (std::size_t b = 0; b < n; ++b) {
      Rational acc = 0;
      for (std::size_t a = 0; a < n; ++a) acc += om[x][a] * R[a][b];
      if (acc != (x == b ? 1 : 0)) {
        rep.inverse_ok = false;
        if (rep.diff.empty())
          rep.diff = "(r o omega)(" + w.w_basis[x].to_string() + ") has coefficient " + acc.get_str() + " at " +
                     w.w_basis[b].to_string();
        break;
      }
    }
  std::vector<std::pair<GenIdx, Rational>> e;
  for (int c = 2; c <= N - 1; ++c) e.push_back({{c, c + 1}, 1});
  rep.e_outside_w = !in_wonderbolic(N, e);
  return rep;
}

}  // namespace walg
