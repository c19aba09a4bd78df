#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "satogr/rational.hpp"

namespace satogr {

template <class R>
using Matrix = std::vector<std::vector<R>>;

// Gaussian elimination over Q.
Rational det(Matrix<Rational> m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix<Rational>& m);
int rank(Matrix<Rational> m);
// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<std::vector<Rational>> nullspace(Matrix<Rational> m, int cols);

// Division-free determinant by row expansion memoised over column subsets.
template <class R>
R det_expand(const Matrix<R>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return R(1);
  // dp[mask] = det of rows 0..popcount(mask)-1 on the columns in mask.
  std::vector<R> dp(std::size_t(1) << n, R(0));
  std::vector<bool> have(dp.size(), false);
  dp[0] = R(1);
  have[0] = true;
  for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    R acc(0);
    int pos = 0;
    for (int c = n - 1; c >= 0; --c) {
      if (!(mask >> c & 1)) continue;
      // c is the pos-th highest column of mask; expanding the last row picks it.
      std::uint32_t rest = mask & ~(1u << c);
      if (have[rest] && !m[row][c].is_zero() && !dp[rest].is_zero()) {
        R term = m[row][c] * dp[rest];
        if (pos % 2) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    dp[mask] = acc;
    have[mask] = true;
  }
  return dp.back();
}

template <class R>
Matrix<R> transpose(const Matrix<R>& m) {
  if (m.empty()) return {};
  Matrix<R> t(m[0].size(), std::vector<R>(m.size(), R(0)));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

template <class R>
Matrix<R> matmul(const Matrix<R>& a, const Matrix<R>& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Matrix<R> c(n, std::vector<R>(p, R(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

}  // namespace satogr
