#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "satogr/error.hpp"
#include "satogr/polynomial.hpp"
#include "satogr/rational.hpp"

namespace satogr {

constexpr int kExactTrunc = std::numeric_limits<int>::max();
constexpr int kDefaultWindow = 32;

inline int sat_add(int a, int b) {
  if (a == kExactTrunc || b == kExactTrunc) return kExactTrunc;
  return a + b;
}

// Truncated Laurent series over a coefficient ring R (Rational or Polynomial).
// Coefficients at exponents >= trunc are unknown.
template <class R>
class LaurentSeries {
 public:
  LaurentSeries() = default;
  explicit LaurentSeries(const std::map<int, R>& c, int trunc = kExactTrunc) : trunc_(trunc) {
    for (auto& [e, x] : c)
      if (e < trunc_ && !x.is_zero()) c_.emplace(e, x);
  }
  static LaurentSeries monomial(int e, const R& c = R(1)) {
    LaurentSeries s;
    if (!c.is_zero()) s.c_.emplace(e, c);
    return s;
  }
  static LaurentSeries constant(const R& c) { return monomial(0, c); }

  const std::map<int, R>& coeffs() const { return c_; }
  int trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ == kExactTrunc; }
  bool is_zero() const { return c_.empty(); }
  bool known(int e) const { return e < trunc_; }

  std::optional<int> valuation() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
  }
  // Valuation, or trunc when no coefficient is known to be nonzero.
  int low() const { return c_.empty() ? trunc_ : c_.begin()->first; }
  int max_exponent() const { return c_.empty() ? std::numeric_limits<int>::min() : c_.rbegin()->first; }

  R coeff(int e) const {
    if (!known(e)) fail(ErrorKind::InsufficientPrecision, "coefficient at z^" + std::to_string(e) + " is beyond trunc " + std::to_string(trunc_));
    auto it = c_.find(e);
    return it == c_.end() ? R(0) : it->second;
  }
  void set(int e, const R& x) {
    if (!known(e)) return;
    if (x.is_zero()) c_.erase(e);
    else c_[e] = x;
  }

  LaurentSeries truncated(int t) const {
    LaurentSeries r;
    r.trunc_ = std::min(trunc_, t);
    for (auto& [e, x] : c_)
      if (e < r.trunc_) r.c_.emplace(e, x);
    return r;
  }
  LaurentSeries shifted(int k) const {
    LaurentSeries r;
    r.trunc_ = sat_add(trunc_, k);
    for (auto& [e, x] : c_) r.c_.emplace(e + k, x);
    return r;
  }
  // Drops known coefficients below e (used for quotienting by a monomial tail).
  LaurentSeries without_below(int e) const {
    LaurentSeries r;
    r.trunc_ = trunc_;
    for (auto& [k, x] : c_)
      if (k >= e) r.c_.emplace(k, x);
    return r;
  }
  LaurentSeries scaled(const R& a) const {
    LaurentSeries r;
    r.trunc_ = trunc_;
    if (a.is_zero()) return r;
    for (auto& [e, x] : c_) {
      R y = x * a;
      if (!y.is_zero()) r.c_.emplace(e, y);
    }
    return r;
  }
  LaurentSeries derivative() const {
    LaurentSeries r;
    r.trunc_ = trunc_ == kExactTrunc ? kExactTrunc : trunc_ - 1;
    for (auto& [e, x] : c_)
      if (e != 0) r.c_.emplace(e - 1, x * R(Rational(e)));
    return r;
  }
  LaurentSeries parity_part(int parity) const {
    LaurentSeries r;
    r.trunc_ = trunc_;
    for (auto& [e, x] : c_)
      if (((e % 2) + 2) % 2 == parity) r.c_.emplace(e, x);
    return r;
  }

  LaurentSeries& operator+=(const LaurentSeries& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    std::erase_if(c_, [&](auto& kv) { return kv.first >= trunc_; });
    for (auto& [e, x] : o.c_) {
      if (e >= trunc_) continue;
      auto [it, fresh] = c_.try_emplace(e, x);
      if (!fresh) {
        it->second += x;
        if (it->second.is_zero()) c_.erase(it);
      }
    }
    return *this;
  }
  LaurentSeries operator-() const { return scaled(R(-1)); }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this += -o; }
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }

  friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
    LaurentSeries r;
    r.trunc_ = std::min(sat_add(f.trunc_, g.low()), sat_add(g.trunc_, f.low()));
    for (auto& [a, x] : f.c_) {
      for (auto& [b, y] : g.c_) {
        if (a + b >= r.trunc_) break;
        R p = x * y;
        if (p.is_zero()) continue;
        auto [it, fresh] = r.c_.try_emplace(a + b, p);
        if (!fresh) {
          it->second += p;
          if (it->second.is_zero()) r.c_.erase(it);
        }
      }
    }
    return r;
  }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  // Equality of the parts known in both.
  bool agrees(const LaurentSeries& o) const {
    int t = std::min(trunc_, o.trunc_);
    return (truncated(t) - o.truncated(t)).is_zero();
  }
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }

 private:
  std::map<int, R> c_;
  int trunc_ = kExactTrunc;
};

using Series = LaurentSeries<Rational>;
using PolySeries = LaurentSeries<Polynomial>;

template <class R>
LaurentSeries<R> lift(const Series& s) {
  std::map<int, R> c;
  for (auto& [e, x] : s.coeffs()) c.emplace(e, R(x));
  return LaurentSeries<R>(c, s.trunc());
}

// Drops parameter truncation information; coefficients must be constants.
Series constant_part(const PolySeries& s);

// z -> s(z) with valuation(s) = 1 and nonzero leading coefficient.
class SubstitutionMap {
 public:
  explicit SubstitutionMap(const Series& image);
  static SubstitutionMap sigma0();
  static SubstitutionMap identity();

  const Series& image() const { return image_; }
  Rational leading() const { return image_.coeff(1); }
  // z -> c z exactly.
  bool is_linear() const;
  bool is_identity() const { return is_linear() && leading().is_one(); }
  bool is_sigma0() const { return is_linear() && leading() == Rational(-1); }
  // s(t(z)).
  SubstitutionMap after(const SubstitutionMap& t, int want = kDefaultWindow) const;

 private:
  Series image_;
};

// Inverse of f. The result is capped at exponent `want` when f is not inverted exactly.
Series invert(const Series& f, std::optional<int> want = std::nullopt);

template <class R>
R residue(const LaurentSeries<R>& f) {
  if (!f.known(-1)) fail(ErrorKind::InsufficientPrecision, "residue needs the z^-1 coefficient; trunc is " + std::to_string(f.trunc()));
  return f.coeff(-1);
}

// f(s(z)). `want` caps precision when s has to be inverted.
template <class R>
LaurentSeries<R> substitute(const LaurentSeries<R>& f, const SubstitutionMap& s, int want = kDefaultWindow) {
  if (f.is_zero()) return f;
  if (s.is_linear()) {
    Rational c = s.leading();
    std::map<int, R> out;
    for (auto& [e, x] : f.coeffs()) out.emplace(e, x * R(c.pow(e)));
    return LaurentSeries<R>(out, f.trunc());
  }
  // s = z u with u a unit.
  Series u = s.image().shifted(-1);
  int lo = f.low(), hi = f.max_exponent();
  LaurentSeries<R> r(std::map<int, R>{}, f.trunc());
  std::map<int, Series> powers;
  if (hi >= 0) {
    Series p = Series::constant(Rational(1));
    for (int k = 0; k <= hi; ++k) {
      powers[k] = p;
      p = p * u;
    }
  }
  if (lo < 0) {
    Series uinv = invert(u, want - lo);
    Series p = uinv;
    for (int k = -1; k >= lo; --k) {
      powers[k] = p;
      p = p * uinv;
    }
  }
  for (auto& [e, x] : f.coeffs()) r += lift<R>(powers.at(e).shifted(e)).scaled(x);
  return r;
}

template <class R>
R pair_sigma(const LaurentSeries<R>& f, const LaurentSeries<R>& g, const SubstitutionMap& s) {
  return residue(f * substitute(g, s, std::max(kDefaultWindow, -f.low() + 1)));
}

template <class R>
R pair_std(const LaurentSeries<R>& f, const LaurentSeries<R>& g) {
  return residue(f * g);
}

std::string series_str(const Series& s);

}  // namespace satogr
