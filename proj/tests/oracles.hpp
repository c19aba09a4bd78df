#pragma once
// Independent reference computations used by the tests. Nothing here calls the code under test
// beyond the Rational and Series containers.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "satogr/series.hpp"

namespace oracle {

using satogr::Rational;
using satogr::Series;

// Schur polynomial in N variables: sum over semistandard tableaux with entries 1..N.
inline Rational schur_ssyt(const std::vector<int>& lam, const std::vector<Rational>& x) {
  int N = static_cast<int>(x.size());
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(lam.size()); ++i)
    for (int j = 0; j < lam[i]; ++j) cells.emplace_back(i, j);
  std::map<std::pair<int, int>, int> T;
  Rational total(0);
  std::function<void(size_t, Rational)> rec = [&](size_t k, Rational w) {
    if (k == cells.size()) {
      total += w;
      return;
    }
    auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, T[{i, j - 1}]);
    if (i > 0) lo = std::max(lo, T[{i - 1, j}] + 1);
    for (int v = lo; v <= N; ++v) {
      T[{i, j}] = v;
      rec(k + 1, w * x[v - 1]);
    }
  };
  rec(0, Rational(1));
  return total;
}

// Pfaffian as a signed sum over perfect matchings.
inline Rational pfaffian_matchings(const std::vector<std::vector<Rational>>& m) {
  int n = static_cast<int>(m.size());
  if (n % 2) return Rational(0);
  std::vector<int> perm;
  Rational total(0);
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      // sign of the permutation listed in perm
      int inv = 0;
      for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
      Rational w(inv % 2 ? -1 : 1);
      for (size_t a = 0; a < perm.size(); a += 2) w *= m[perm[a]][perm[a + 1]];
      total += w;
      return;
    }
    used[i] = true;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      perm.push_back(i);
      perm.push_back(j);
      rec();
      perm.pop_back();
      perm.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec();
  return total;
}

// Gaps of the numerical semigroup generated by gens (gcd 1 assumed).
inline std::set<int> semigroup(const std::vector<int>& gens, int bound) {
  std::vector<bool> in(bound + 1, false);
  in[0] = true;
  for (int k = 1; k <= bound; ++k)
    for (int g : gens)
      if (k >= g && in[k - g]) in[k] = true;
  std::set<int> s;
  for (int k = 0; k <= bound; ++k)
    if (in[k]) s.insert(k);
  return s;
}

inline std::set<int> gaps(const std::vector<int>& gens, int bound) {
  auto s = semigroup(gens, bound);
  std::set<int> g;
  for (int k = 0; k <= bound; ++k)
    if (!s.count(k)) g.insert(k);
  return g;
}

// f(s(z)) by Horner's rule over the exponents of a polynomial f with nonnegative exponents.
inline Series compose_horner(const Series& f, const Series& s) {
  int hi = f.max_exponent();
  Series acc = Series::constant(f.coeff(hi));
  for (int e = hi - 1; e >= 0; --e) acc = acc * s + Series::constant(f.coeff(e));
  return acc;
}

// Series coefficient of z^-1 in f(z) g(-z), computed on the dense coefficient lists.
inline Rational residue_sigma0(const Series& f, const Series& g) {
  Rational r(0);
  for (auto& [a, x] : f.coeffs()) {
    auto it = g.coeffs().find(-1 - a);
    if (it == g.coeffs().end()) continue;
    Rational y = it->second;
    if ((-1 - a) % 2) y = -y;
    r += x * y;
  }
  return r;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Rational rational(int num = 5, int den = 3) {
    int n = uniform(-num, num);
    int d = uniform(1, den);
    return Rational(n, d);
  }
  Rational nonzero(int num = 5, int den = 3) {
    Rational r(0);
    while (r.is_zero()) r = rational(num, den);
    return r;
  }
  Series series(int lo, int hi, double density = 0.6) {
    std::map<int, Rational> c;
    std::bernoulli_distribution keep(density);
    for (int e = lo; e <= hi; ++e)
      if (keep(gen)) c[e] = rational();
    return Series(c);
  }
};

}  // namespace oracle
