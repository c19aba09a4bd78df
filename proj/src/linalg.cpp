#include "satogr/linalg.hpp"

#include <utility>

namespace satogr {

Rational det(Matrix<Rational> m) {
  int n = static_cast<int>(m.size());
  Rational d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!m[r][c].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Rational inv = m[c][c].inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      Rational f = m[r][c] * inv;
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

std::vector<int> rref(Matrix<Rational>& m) {
  std::vector<int> piv;
  if (m.empty()) return piv;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Rational inv = m[r][c].inverse();
    for (int k = c; k < cols; ++k) m[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(Matrix<Rational> m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> nullspace(Matrix<Rational> m, int cols) {
  auto piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = Rational(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace satogr
