#include "satogr/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace satogr {

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (auto& [v, e] : m) w += var_weight(v) * e;
  return w;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  static const char* prefix[] = {"t", "t'", "t''", "a"};
  std::ostringstream os;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << "*";
    os << prefix[static_cast<int>(m[i].first.kind)] << m[i].first.index;
    if (m[i].second != 1) os << "^" << m[i].second;
  }
  return os.str();
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_[{}] = c;
}

Polynomial Polynomial::variable(Var v, int maxweight) {
  return monomial({{v, 1}}, Rational(1), maxweight);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c, int maxweight) {
  Polynomial p;
  p.maxweight_ = maxweight;
  if (!c.is_zero() && monomial_weight(m) <= maxweight) p.terms_[m] = c;
  return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int Polynomial::max_term_weight() const {
  int w = -1;
  for (auto& [m, c] : terms_) w = std::max(w, monomial_weight(m));
  return w;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero() || monomial_weight(m) > maxweight_) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::truncated(int w) const {
  Polynomial r;
  r.maxweight_ = std::min(w, maxweight_);
  for (auto& [m, c] : terms_)
    if (monomial_weight(m) <= r.maxweight_) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::homogeneous_part(int w) const {
  Polynomial r;
  for (auto& [m, c] : terms_)
    if (monomial_weight(m) == w) r.terms_.emplace(m, c);
  return r;
}

Polynomial Polynomial::derivative(Var v) const {
  Polynomial r;
  r.maxweight_ = maxweight_ == kExactWeight ? kExactWeight : maxweight_ - var_weight(v);
  for (auto& [m, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].first != v) continue;
      Monomial d = m;
      int e = d[i].second;
      if (--d[i].second == 0) d.erase(d.begin() + static_cast<long>(i));
      r.add_term(d, c * Rational(e));
    }
  }
  return r;
}

Polynomial Polynomial::negate_kind(VarKind k) const {
  Polynomial r;
  r.maxweight_ = maxweight_;
  for (auto& [m, c] : terms_) {
    int deg = 0;
    for (auto& [v, e] : m)
      if (v.kind == k) deg += e;
    r.terms_.emplace(m, deg % 2 ? -c : c);
  }
  return r;
}

Polynomial Polynomial::rename_kind(VarKind from, VarKind to) const {
  Polynomial r;
  r.maxweight_ = maxweight_;
  for (auto& [m, c] : terms_) {
    Monomial n = m;
    for (auto& [v, e] : n)
      if (v.kind == from) v.kind = to;
    std::sort(n.begin(), n.end());
    r.add_term(n, c);
  }
  return r;
}

Polynomial Polynomial::compose(const std::map<Var, Polynomial>& subs) const {
  Polynomial r;
  r.maxweight_ = kExactWeight;
  bool any_trunc = maxweight_ != kExactWeight;
  for (auto& [v, p] : subs) any_trunc = any_trunc || !p.is_exact();
  int cap = kExactWeight;
  for (auto& [v, p] : subs) cap = std::min(cap, p.maxweight_);
  if (maxweight_ != kExactWeight) {
    // Unknown terms of weight > maxweight map to terms of weight > maxweight
    // only when every substituted image is at least as heavy as its variable.
    int mult = kExactWeight;
    for (auto& [v, p] : subs) {
      int lw = kExactWeight;
      for (auto& [m, c] : p.terms_) lw = std::min(lw, monomial_weight(m));
      if (lw == kExactWeight) continue;
      mult = std::min(mult, lw - var_weight(v));
    }
    cap = std::min(cap, mult >= 0 ? maxweight_ : -1);
  }
  r.maxweight_ = any_trunc ? cap : kExactWeight;
  for (auto& [m, c] : terms_) {
    Polynomial term(c);
    term.maxweight_ = r.maxweight_;
    for (auto& [v, e] : m) {
      auto it = subs.find(v);
      Polynomial f = it == subs.end() ? variable(v) : it->second;
      for (int i = 0; i < e; ++i) term *= f;
    }
    r += term;
  }
  return r.truncated(r.maxweight_);
}

Rational Polynomial::evaluate(const std::map<Var, Rational>& at) const {
  Rational s(0);
  for (auto& [m, c] : terms_) {
    Rational t = c;
    for (auto& [v, e] : m) {
      auto it = at.find(v);
      t *= it == at.end() ? Rational(0) : it->second.pow(e);
    }
    s += t;
  }
  return s;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r;
  r.maxweight_ = maxweight_;
  if (c.is_zero()) return r;
  for (auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

std::optional<std::pair<Monomial, Rational>> Polynomial::lowest_term() const {
  std::optional<std::pair<Monomial, Rational>> best;
  int bw = 0;
  for (auto& [m, c] : terms_) {
    int w = monomial_weight(m);
    if (!best || w < bw) {
      best = {m, c};
      bw = w;
    }
  }
  return best;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  maxweight_ = std::min(maxweight_, o.maxweight_);
  if (maxweight_ != kExactWeight) std::erase_if(terms_, [&](auto& kv) { return monomial_weight(kv.first) > maxweight_; });
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial r;
  r.maxweight_ = maxweight_;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.maxweight_ = std::min(a.maxweight_, b.maxweight_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.is_constant()) return a.scaled(b.constant_term()).truncated(r.maxweight_);
  if (a.is_constant()) return b.scaled(a.constant_term()).truncated(r.maxweight_);
  for (auto& [ma, ca] : a.terms_) {
    int wa = monomial_weight(ma);
    if (wa > r.maxweight_) continue;
    for (auto& [mb, cb] : b.terms_) {
      if (r.maxweight_ != kExactWeight && wa + monomial_weight(mb) > r.maxweight_) continue;
      r.add_term(monomial_mul(ma, mb), ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (!m.empty()) os << "*" << monomial_str(m);
  }
  if (maxweight_ != kExactWeight) os << " + O(w>" << maxweight_ << ")";
  return os.str();
}

bool agrees(const Polynomial& a, const Polynomial& b) {
  int w = std::min(a.maxweight(), b.maxweight());
  Polynomial d = a.truncated(w) - b.truncated(w);
  return d.is_zero();
}

}  // namespace satogr
