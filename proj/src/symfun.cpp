#include "satogr/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "satogr/error.hpp"
#include "satogr/linalg.hpp"

namespace satogr {

Partition::Partition(std::vector<int> p) {
  for (int x : p) {
    if (x < 0) fail(ErrorKind::ParseError, "negative part in partition");
    if (x > 0) parts.push_back(x);
  }
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) fail(ErrorKind::ParseError, "partition parts must be weakly decreasing");
}

int Partition::weight() const {
  int w = 0;
  for (int x : parts) w += x;
  return w;
}

Partition Partition::conjugate() const {
  std::vector<int> c(first(), 0);
  for (int x : parts)
    for (int j = 0; j < x; ++j) ++c[j];
  return Partition(c);
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << "]";
  return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  return a.parts <=> b.parts;
}

namespace {

void gen_parts(int n, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, maxp); k >= 1; --k) {
    cur.push_back(k);
    gen_parts(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_parts(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto p = enumerate_partitions(k);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::vector<Partition> horizontal_strips(const Partition& lam, int alpha) {
  std::vector<Partition> out;
  if (alpha < 0) return out;
  int l = lam.length();
  std::vector<int> mu(l, 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == l) {
      if (rem == 0) out.emplace_back(mu);
      return;
    }
    int lo = lam.part(i + 1);
    for (int m = lam.part(i); m >= lo; --m) {
      if (lam.part(i) - m > rem) break;
      mu[i] = m;
      self(self, i + 1, rem - (lam.part(i) - m));
    }
  };
  rec(rec, 0, alpha);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::mutex cache_mu;
std::map<std::pair<int, int>, Polynomial> h_cache;
std::map<std::pair<Partition, int>, Polynomial> schur_cache;

Polynomial h_exact(int beta, VarKind kind) {
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = h_cache.find({beta, static_cast<int>(kind)});
    if (it != h_cache.end()) return it->second;
  }
  Polynomial r;
  if (beta == 0) {
    r = Polynomial(Rational(1));
  } else if (beta > 0) {
    // n h_n = sum_k k t_k h_{n-k}
    for (int k = 1; k <= beta; ++k)
      r += Polynomial::variable({kind, k}) * h_exact(beta - k, kind) * Polynomial(Rational(k));
    r = r.scaled(Rational(1, beta));
  }
  std::lock_guard<std::mutex> lk(cache_mu);
  h_cache.emplace(std::make_pair(beta, static_cast<int>(kind)), r);
  return r;
}

Polynomial e_exact(int n, VarKind kind) {
  // e_n(t) = (-1)^n h_n(-t)
  Polynomial h = h_exact(n, kind).negate_kind(kind);
  return n % 2 ? -h : h;
}

Polynomial schur_exact(const Partition& lam, VarKind kind) {
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = schur_cache.find({lam, static_cast<int>(kind)});
    if (it != schur_cache.end()) return it->second;
  }
  Polynomial r;
  if (lam.length() <= lam.first()) {
    int l = lam.length();
    Matrix<Polynomial> m(l, std::vector<Polynomial>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) m[i][j] = h_exact(lam.part(i) - i + j, kind);
    r = det_expand(m);
  } else {
    Partition c = lam.conjugate();
    int l = c.length();
    Matrix<Polynomial> m(l, std::vector<Polynomial>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        int n = c.part(i) - i + j;
        m[i][j] = n < 0 ? Polynomial() : e_exact(n, kind);
      }
    r = det_expand(m);
  }
  std::lock_guard<std::mutex> lk(cache_mu);
  schur_cache.emplace(std::make_pair(lam, static_cast<int>(kind)), r);
  return r;
}

}  // namespace

Polynomial h_poly(int beta, int W, VarKind kind) { return h_exact(beta, kind).truncated(W); }

Polynomial schur_poly(const Partition& lam, int W, VarKind kind) { return schur_exact(lam, kind).truncated(W); }

SymFun& SymFun::add(const Partition& p, const Rational& c) {
  auto [it, fresh] = terms.try_emplace(p, c);
  if (!fresh) it->second += c;
  if (it->second.is_zero()) terms.erase(it);
  return *this;
}

int SymFun::weight() const {
  int w = -1;
  for (auto& [p, c] : terms) w = std::max(w, p.weight());
  return w;
}

SymFun d_operator(const Partition& lam, int alpha) {
  SymFun s;
  for (auto& mu : horizontal_strips(lam, alpha)) s.add(mu, Rational(1));
  return s;
}

Polynomial operator_poly(const SymFun& op, SignMode sign) {
  Polynomial r;
  for (auto& [p, c] : op.terms) r += schur_exact(p, VarKind::Time).scaled(c);
  return sign == SignMode::Negated ? r.negate_kind(VarKind::Time) : r;
}

Rational hall_pairing(const Polynomial& op, const Polynomial& g) {
  Rational s(0);
  const auto& gt = g.terms();
  for (auto& [m, c] : op.terms()) {
    auto it = gt.find(m);
    if (it == gt.end()) continue;
    Rational w = c * it->second;
    for (auto& [v, e] : m) w *= factorial(e) / Rational(v.index).pow(e);
    s += w;
  }
  return s;
}

Rational literal_at_zero(const Polynomial& op, const Polynomial& g) {
  Rational s(0);
  for (auto& [m, c] : op.terms()) {
    Polynomial d = g;
    for (auto& [v, e] : m) {
      Var target = tvar(v.index);
      for (int i = 0; i < e; ++i) d = d.derivative(target).scaled(Rational(1, v.index));
      if (d.is_zero()) break;
    }
    s += c * d.constant_term();
  }
  return s;
}

namespace {

void check_weight(const Polynomial& op, const Polynomial& g) {
  if (op.max_term_weight() > g.maxweight())
    fail(ErrorKind::InsufficientPrecision, "operator weight " + std::to_string(op.max_term_weight()) + " exceeds truncation " + std::to_string(g.maxweight()));
}

}  // namespace

Rational apply_at_zero(const SymFun& op, SignMode sign, const Polynomial& g) {
  Polynomial p = operator_poly(op, sign);
  check_weight(p, g);
  return hall_pairing(p, g);
}

Rational apply_at_zero_literal(const SymFun& op, SignMode sign, const Polynomial& g) {
  Polynomial p = operator_poly(op, sign);
  check_weight(p, g);
  return literal_at_zero(p, g);
}

SymFun schur_expand(const Polynomial& g, int maxweight) {
  SymFun s;
  for (auto& p : partitions_up_to(maxweight)) s.add(p, hall_pairing(schur_exact(p, VarKind::Time), g));
  return s;
}

}  // namespace satogr
