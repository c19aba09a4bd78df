#include "satogr/krichever.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "satogr/linalg.hpp"

namespace satogr {

namespace {

int pole_order(const Series& g) {
  auto v = g.valuation();
  if (!v) fail(ErrorKind::ZeroInput, "zero ring generator");
  return -*v;
}

// Reduced echelon basis keyed by valuation.
std::map<int, Series> echelon(const std::vector<Series>& vecs) {
  std::map<int, Series> basis;
  for (auto v : vecs) {
    for (auto& [p, b] : basis) {
      Rational c = v.coeff(p);
      if (!c.is_zero()) v -= b.scaled(c);
    }
    if (v.is_zero()) continue;
    int p = *v.valuation();
    v = v.scaled(v.coeff(p).inverse());
    for (auto& [q, b] : basis) {
      Rational c = b.coeff(p);
      if (!c.is_zero()) b -= v.scaled(c);
    }
    basis.emplace(p, v);
  }
  return basis;
}

Verdict membership(const FramePoint& U, const Series& v, const std::string& what) {
  Verdict out;
  Series r = U.reduce(v);
  if (!r.is_zero()) {
    out.holds = false;
    out.witness = what + " not in U (remainder at z^" + std::to_string(*r.valuation()) + ")";
    out.value = r.coeff(*r.valuation());
  }
  return out;
}

}  // namespace

FramePoint span_closure(const CurveData& data, Window w) {
  if (data.ring_gens.empty()) fail(ErrorKind::NotClosed, "no ring generators");
  int R = -w.lo;
  std::vector<int> orders;
  for (auto& g : data.ring_gens) {
    if (!g.is_exact()) fail(ErrorKind::NotClosed, "ring generators must be Laurent polynomials");
    int p = pole_order(g);
    if (p <= 0) fail(ErrorKind::NotClosed, "ring generator without a pole");
    orders.push_back(p);
  }
  std::vector<Series> mods = data.module_gens;
  if (mods.empty()) mods.push_back(Series::constant(Rational(1)));

  std::vector<Series> vecs;
  for (auto& m : mods) {
    int pm = pole_order(m);
    std::function<void(size_t, int, const Series&)> rec = [&](size_t i, int order, const Series& cur) {
      if (i == orders.size()) {
        vecs.push_back(cur);
        return;
      }
      Series c = cur;
      for (int o = order; o <= R; o += orders[i]) {
        rec(i + 1, o, c);
        c = c * data.ring_gens[i];
      }
    };
    if (pm <= R) rec(0, pm, m);
  }
  auto basis = echelon(vecs);

  int J = R;
  while (basis.count(-J)) --J;
  int pmin = *std::min_element(orders.begin(), orders.end());
  if (R - J < pmin) fail(ErrorKind::NotClosed, "pole orders do not fill a run of length " + std::to_string(pmin) + " below the window radius");
  std::vector<Series> gens;
  for (auto& [p, b] : basis) {
    if (p < -J) {
      if (b.coeffs().size() != 1)
        fail(ErrorKind::NotClosed, "span element with leading z^" + std::to_string(p) + " is not a monomial");
      continue;
    }
    gens.push_back(b);
  }
  FramePoint F = FramePoint::span(gens, J, w);

  std::vector<Series> mod_all = F.gens();
  for (auto& g : data.ring_gens) {
    int H = std::max(0, g.max_exponent());
    for (auto& u : F.gens())
      if (!F.contains(g * u)) fail(ErrorKind::NotClosed, "ring generator times a span element leaves the span");
    for (int j = F.tail() + 1; j <= F.tail() + H; ++j)
      if (!F.contains(g * Series::monomial(-j))) fail(ErrorKind::NotClosed, "ring generator does not preserve the tail");
  }
  return F;
}

Verdict is_ring_point(const FramePoint& U) {
  if (!U.exact()) fail(ErrorKind::InsufficientPrecision, "ring membership needs an exact point");
  Verdict v = membership(U, Series::constant(Rational(1)), "1");
  if (!v.holds) return v;
  auto& g = U.gens();
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t k = i; k < g.size(); ++k) {
      v = membership(U, g[i] * g[k], "u" + std::to_string(i) + "*u" + std::to_string(k));
      if (!v.holds) return v;
    }
    int H = g[i].max_exponent();
    for (int j = U.tail() + 1; j <= U.tail() + H; ++j) {
      v = membership(U, g[i] * Series::monomial(-j), "u" + std::to_string(i) + "*z^-" + std::to_string(j));
      if (!v.holds) return v;
    }
  }
  return v;
}

Verdict p0_membership(const FramePoint& U) {
  Verdict v = is_ring_point(U);
  if (!v.holds) return v;
  return is_sigma_invariant(U, SubstitutionMap::sigma0());
}

std::vector<Series> stabilizer(const FramePoint& U, int n) {
  if (n < 0) fail(ErrorKind::WindowTooSmall, "stabilizer degree must be nonnegative");
  if (!U.exact()) fail(ErrorKind::InsufficientPrecision, "stabilizer needs an exact point");
  std::vector<Series> tests = U.gens();
  for (int j = U.tail() + 1; j <= U.tail() + n; ++j) tests.push_back(Series::monomial(-j));
  int cols = 2 * n + 1;  // column c is exponent c - n
  std::map<std::pair<size_t, int>, int> row_of;
  Matrix<Rational> m;
  for (size_t t = 0; t < tests.size(); ++t) {
    for (int c = 0; c < cols; ++c) {
      Series prod = tests[t].shifted(c - n);
      if (!prod.is_zero() && prod.max_exponent() >= U.window().hi)
        fail(ErrorKind::WindowTooSmall, "stabilizer test product exceeds the window");
      Series r = U.reduce(prod);
      for (auto& [e, x] : r.coeffs()) {
        auto [it, fresh] = row_of.try_emplace({t, e}, static_cast<int>(m.size()));
        if (fresh) m.emplace_back(cols, Rational(0));
        m[it->second][c] = x;
      }
    }
  }
  auto null = nullspace(m, cols);
  rref(null);
  std::vector<Series> out;
  for (auto& row : null) {
    std::map<int, Rational> c;
    for (int k = 0; k < cols; ++k)
      if (!row[k].is_zero()) c.emplace(k - n, row[k]);
    if (!c.empty()) out.push_back(Series(c));
  }
  std::sort(out.begin(), out.end(), [](const Series& a, const Series& b) { return *a.valuation() > *b.valuation(); });
  return out;
}

OrbitProfile orbit_profile(const FramePoint& U, int nmax, bool odd_only) {
  if (nmax < 1) fail(ErrorKind::WindowTooSmall, "nmax must be positive");
  OrbitProfile prof;
  prof.odd_only = odd_only;
  auto S = stabilizer(U, nmax);
  int cols = 2 * nmax + 1;
  auto row = [&](const Series& s) {
    std::vector<Rational> r(cols, Rational(0));
    for (auto& [e, x] : s.coeffs()) r[e + nmax] = x;
    return r;
  };
  Matrix<Rational> base;
  for (auto& s : S) base.push_back(row(s));
  int dimS = rank(base);
  Matrix<Rational> m = base;
  for (int i = 1; i <= nmax; ++i) {
    if (!odd_only || i % 2) m.push_back(row(Series::monomial(-i)));
    prof.d.push_back(rank(m) - dimS);
  }
  int run = std::max(3, nmax / 3);
  int k = nmax - 1;
  while (k > 0 && prof.d[k - 1] == prof.d.back()) --k;
  if (nmax - k >= run) {
    prof.stabilized = true;
    prof.stable_from = k + 1;
    prof.genus = prof.d.back();
  }
  return prof;
}

FramePoint quotient_ring(const FramePoint& U) {
  Verdict inv = is_sigma_invariant(U, SubstitutionMap::sigma0());
  if (!inv.holds) fail(ErrorKind::NotSigmaInvariant, "quotient needs a sigma0-invariant point: " + inv.witness);
  Verdict ring = is_ring_point(U);
  if (!ring.holds) fail(ErrorKind::NotRingPoint, "quotient needs a ring point: " + ring.witness);
  return split_even_odd(U).first;
}

SubstitutionMap normalize_involution(const SubstitutionMap& s, int order) {
  if (!(s.leading() == Rational(-1))) fail(ErrorKind::NotNormalizable, "linear coefficient is " + s.leading().str() + ", need -1");
  int t = std::min(s.image().trunc(), order + 1);
  Series ss = s.after(s, t).image().truncated(t);
  Series id = Series::monomial(1).truncated(t);
  if (!(ss - id).is_zero()) fail(ErrorKind::NotInvolution, "s(s(z)) differs from z at z^" + std::to_string(*(ss - id).valuation()));
  if (t <= order) fail(ErrorKind::InsufficientPrecision, "involution known only below z^" + std::to_string(t));
  Series w = Series::monomial(1).truncated(order + 1);
  for (int n = 2; n <= order; ++n) {
    Series e = substitute(w, s, order + 1) + w;
    Rational c = e.coeff(n);
    if (n % 2 == 0) {
      w.set(n, c * Rational(-1, 2));
    } else if (!c.is_zero()) {
      fail(ErrorKind::NotInvolution, "odd-order obstruction at z^" + std::to_string(n));
    }
  }
  return SubstitutionMap(w);
}

}  // namespace satogr
