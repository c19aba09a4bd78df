#include "satogr/grassmann.hpp"

#include <algorithm>

#include "satogr/linalg.hpp"

namespace satogr {

namespace {

int pivot_of(const Series& s) { return *s.valuation(); }

std::string exps_str(int e) { return "z^" + std::to_string(e); }

}  // namespace

FramePoint FramePoint::make(const std::vector<Series>& gens, int tail, Window w, bool exact) {
  return build(gens, tail, w, exact, false);
}

FramePoint FramePoint::span(const std::vector<Series>& gens, int tail, Window w, bool exact) {
  return build(gens, tail, w, exact, true);
}

FramePoint FramePoint::build(const std::vector<Series>& gens_in, int tail, Window w, bool exact, bool allow_dependent) {
  std::vector<Series> gens = gens_in;
  if (tail < 0) {
    for (int e = 0; e < -tail; ++e) gens.push_back(Series::monomial(e));
    tail = 0;
  }
  if (-tail < w.lo) fail(ErrorKind::WindowTooSmall, "tail z^-" + std::to_string(tail + 1) + " lies below the window");
  FramePoint U;
  U.tail_ = tail;
  U.window_ = w;
  U.exact_ = exact;
  for (auto& g : gens) {
    if (!g.is_exact()) U.exact_ = false;
    for (auto& [e, x] : g.coeffs())
      if (e >= w.hi || (e < w.lo && e >= -tail)) fail(ErrorKind::WindowTooSmall, "generator term " + exps_str(e) + " outside window");
    Series r = U.reduce(g);
    if (r.is_zero()) {
      if (allow_dependent) continue;
      fail(ErrorKind::DependentGenerators, "generator reduces to zero modulo the others and the tail");
    }
    int p = pivot_of(r);
    r = r.scaled(r.coeff(p).inverse());
    for (auto& b : U.gens_) {
      auto it = b.coeffs().find(p);
      if (it != b.coeffs().end()) b -= r.scaled(it->second);
    }
    auto pos = std::find_if(U.gens_.begin(), U.gens_.end(), [&](const Series& b) { return pivot_of(b) > p; });
    U.gens_.insert(pos, r);
  }
  if (U.exact_) {
    // Absorb generators that are exactly the next tail monomial.
    while (U.tail_ > 0 && !U.gens_.empty()) {
      const Series& b = U.gens_.front();
      if (pivot_of(b) != -U.tail_ || b.coeffs().size() != 1) break;
      U.gens_.erase(U.gens_.begin());
      --U.tail_;
    }
  }
  return U;
}

std::vector<int> FramePoint::pivots() const {
  std::vector<int> p;
  for (auto& g : gens_) p.push_back(pivot_of(g));
  return p;
}

int FramePoint::parity() const {
  int n = 0;
  for (auto& g : gens_)
    if (pivot_of(g) >= 0) ++n;
  return n % 2;
}

int FramePoint::max_exponent() const {
  int h = -tail_ - 1;
  for (auto& g : gens_) h = std::max(h, g.is_exact() ? g.max_exponent() : g.trunc() - 1);
  return h;
}

std::set<int> FramePoint::maya(int floor) const {
  std::set<int> s;
  for (int e = floor; e < -tail_; ++e) s.insert(e);
  for (int p : pivots())
    if (p >= floor) s.insert(p);
  return s;
}

Partition FramePoint::partition() const {
  int d = index();
  auto p = pivots();
  std::vector<int> desc(p.rbegin(), p.rend());
  std::vector<int> parts;
  for (size_t i = 0; i < desc.size(); ++i) parts.push_back(desc[i] + static_cast<int>(i) + 1 - d);
  return Partition(parts);
}

Series FramePoint::reduce(const Series& v) const {
  Series r = v.without_below(-tail_);
  for (auto& b : gens_) {
    int p = pivot_of(b);
    auto it = r.coeffs().find(p);
    if (it == r.coeffs().end()) continue;
    r -= b.scaled(it->second);
  }
  return r;
}

std::vector<Series> FramePoint::basis_descending(int count) const {
  std::vector<Series> out(gens_.rbegin(), gens_.rend());
  for (int j = tail_ + 1; static_cast<int>(out.size()) < count; ++j) out.push_back(Series::monomial(-j));
  if (static_cast<int>(out.size()) > count) out.resize(count);
  return out;
}

Rational plucker_subset(const FramePoint& U, const std::vector<int>& cols, int floor) {
  int J = U.tail();
  if (floor > -J) fail(ErrorKind::WindowTooSmall, "Maya floor above the tail");
  std::vector<Series> rows;
  for (int j = -floor; j > J; --j) rows.push_back(Series::monomial(-j));
  for (auto& g : U.gens()) rows.push_back(g);
  int n = static_cast<int>(rows.size());
  if (static_cast<int>(cols.size()) != n)
    fail(ErrorKind::IndexMismatch, "Maya set has " + std::to_string(cols.size()) + " columns above the floor, frame has " + std::to_string(n) + " rows");
  Matrix<Rational> m(n, std::vector<Rational>(n, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      if (cols[k] < floor) fail(ErrorKind::IndexMismatch, "column below the Maya floor");
      if (!rows[r].known(cols[k])) fail(ErrorKind::WindowTooSmall, "column " + exps_str(cols[k]) + " beyond the known window");
      m[r][k] = rows[r].coeff(cols[k]);
    }
  return det(std::move(m));
}

Rational plucker(const FramePoint& U, const Partition& lam) {
  int d = U.index();
  int J = U.tail();
  int D = std::max(J, lam.length() - d);
  int n = static_cast<int>(U.gens().size()) + D - J;
  std::vector<int> cols;
  for (int i = 1; i <= n; ++i) cols.push_back(lam.part(i - 1) - i + d);
  std::sort(cols.begin(), cols.end());
  return plucker_subset(U, cols, -D);
}

Rational plucker(const FramePoint& U, const Partition& lam, int charge) {
  if (charge != U.index())
    fail(ErrorKind::IndexMismatch, "charge " + std::to_string(charge) + " requested on a point of index " + std::to_string(U.index()));
  return plucker(U, lam);
}

FramePoint flow(const FramePoint& U, const Series& g) {
  if (g.is_zero()) {
    if (g.is_exact()) fail(ErrorKind::ZeroInput, "flow by zero");
    fail(ErrorKind::InsufficientPrecision, "flow element has no known nonzero coefficient");
  }
  int v = *g.valuation();
  const Window& w = U.window();
  if (g.is_exact() && g.coeffs().size() == 1) {
    std::vector<Series> gens;
    for (auto& u : U.gens()) gens.push_back(u.shifted(v));
    return FramePoint::make(gens, U.tail() - v, w, U.exact());
  }
  int J = U.tail();
  int depth = std::max(J, -w.lo + v);
  int newtail = depth - v;
  std::vector<Series> vecs;
  for (auto& u : U.gens()) vecs.push_back(g * u);
  for (int j = J + 1; j <= depth; ++j) vecs.push_back(g.shifted(-j));
  int hi = w.hi;
  for (auto& x : vecs) hi = std::min(hi, x.trunc());
  if (hi <= -newtail) fail(ErrorKind::InsufficientPrecision, "flow element too imprecise for the window");
  for (auto& x : vecs) x = x.truncated(hi);
  return FramePoint::make(vecs, newtail, {w.lo, hi}, false);
}

Verdict is_sigma_invariant(const FramePoint& U, const SubstitutionMap& s) {
  Verdict v;
  v.certified = U.exact() && s.is_linear();
  int want = U.window().hi;
  auto check = [&](const Series& x, const std::string& name) {
    Series r = U.reduce(substitute(x, s, want).truncated(want));
    if (!r.is_zero() && v.holds) {
      v.holds = false;
      v.witness = "sigma(" + name + ") not in U; remainder at " + exps_str(*r.valuation());
      v.value = r.coeffs().begin()->second;
    }
  };
  for (size_t i = 0; i < U.gens().size(); ++i) check(U.gens()[i], "u" + std::to_string(i));
  if (!s.is_linear())
    for (int j = U.tail() + 1; j <= -U.window().lo; ++j) check(Series::monomial(-j), "z^-" + std::to_string(j));
  return v;
}

FramePoint orthogonal(const FramePoint& U, const SubstitutionMap& s) {
  if (!s.is_linear())
    fail(ErrorKind::WindowTooSmall, "orthogonal complements are computed for linear substitutions; normalize the involution first");
  Rational c = s.leading();
  int J = U.tail();
  bool has_gens = !U.gens().empty();
  int H = U.max_exponent();
  int Jp = has_gens ? std::max(0, H + 1) : 0;
  int lo = -Jp, hi = J;  // unknown exponents in [lo, hi)
  int n = hi - lo;
  Window w = U.window();
  if (-Jp < w.lo || J > w.hi) fail(ErrorKind::WindowTooSmall, "orthogonal complement leaves the window");
  if (n <= 0) return FramePoint::make({}, Jp, w, U.exact());
  Matrix<Rational> m;
  for (auto& u : U.gens()) {
    std::vector<Rational> row(n, Rational(0));
    for (int k = lo; k < hi; ++k) {
      int e = -1 - k;
      if (!u.known(e)) fail(ErrorKind::InsufficientPrecision, "generator unknown at " + exps_str(e));
      row[k - lo] = u.coeff(e) * c.pow(k);
    }
    m.push_back(row);
  }
  std::vector<Series> gens;
  for (auto& vec : nullspace(m, n)) {
    std::map<int, Rational> co;
    for (int k = 0; k < n; ++k)
      if (!vec[k].is_zero()) co.emplace(k + lo, vec[k]);
    gens.emplace_back(co);
  }
  return FramePoint::make(gens, Jp, w, U.exact());
}

IsotropyResult is_isotropic(const FramePoint& U, const SubstitutionMap& s) {
  IsotropyResult out;
  out.parity = U.parity();
  Verdict& v = out.verdict;
  v.certified = U.exact() && s.is_linear();
  if (U.index() != 0) {
    v.holds = false;
    v.witness = "index " + std::to_string(U.index()) + " is not 0";
    return out;
  }
  std::vector<std::pair<std::string, Series>> vecs;
  for (size_t i = 0; i < U.gens().size(); ++i) vecs.emplace_back("u" + std::to_string(i), U.gens()[i]);
  size_t ng = vecs.size();
  int top = s.is_linear() ? U.max_exponent() + 1 : -U.window().lo;
  for (int j = U.tail() + 1; j <= top; ++j) vecs.emplace_back("z^-" + std::to_string(j), Series::monomial(-j));
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t k = 0; k < vecs.size(); ++k) {
      if (i >= ng && k >= ng && s.is_linear()) continue;
      Rational p = pair_sigma(vecs[i].second, vecs[k].second, s);
      if (!p.is_zero()) {
        v.holds = false;
        v.witness = "<" + vecs[i].first + ", " + vecs[k].first + "> = " + p.str();
        v.value = p;
        return out;
      }
    }
  return out;
}

std::pair<FramePoint, FramePoint> split_even_odd(const FramePoint& U) {
  Verdict inv = is_sigma_invariant(U, SubstitutionMap::sigma0());
  if (!inv.holds) fail(ErrorKind::NotSigmaInvariant, inv.witness);
  std::vector<Series> ev, od;
  for (auto& u : U.gens()) {
    std::map<int, Rational> e, o;
    for (auto& [k, x] : u.coeffs()) {
      int m = k >= 0 ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
      if (((k % 2) + 2) % 2 == 0) e.emplace(m, x);
      else o.emplace(m, x);
    }
    if (!e.empty()) ev.emplace_back(e, u.is_exact() ? kExactTrunc : (u.trunc() + 1) / 2);
    if (!o.empty()) od.emplace_back(o, u.is_exact() ? kExactTrunc : u.trunc() / 2);
  }
  Window w{U.window().lo / 2 - 1, U.window().hi / 2 + 1};
  int J = U.tail();
  return {FramePoint::span(ev, J / 2, w, U.exact()), FramePoint::span(od, (J + 1) / 2, w, U.exact())};
}

FramePoint merge_even_odd(const FramePoint& even, const FramePoint& odd) {
  int Je = even.tail(), Jo = odd.tail();
  int J = std::max(2 * Je, 2 * Jo - 1);
  std::vector<Series> gens;
  auto lift_part = [&](const Series& s, int off) {
    std::map<int, Rational> c;
    for (auto& [m, x] : s.coeffs()) c.emplace(2 * m + off, x);
    gens.emplace_back(c);
  };
  for (auto& g : even.gens()) lift_part(g, 0);
  for (auto& g : odd.gens()) lift_part(g, 1);
  for (int m = Je + 1; 2 * m <= J; ++m) gens.push_back(Series::monomial(-2 * m));
  for (int k = Jo + 1; 2 * k - 1 <= J; ++k) gens.push_back(Series::monomial(-2 * k + 1));
  Window w{2 * even.window().lo, 2 * even.window().hi};
  return FramePoint::make(gens, J, w, even.exact() && odd.exact());
}

PolySeries exp_nilpotent(const PolySeries& a) {
  for (auto& [e, x] : a.coeffs())
    if (!x.constant_term().is_zero()) fail(ErrorKind::InsufficientPrecision, "exponent must have nilpotent coefficients");
  PolySeries sum = PolySeries::constant(Polynomial(Rational(1)));
  PolySeries term = sum;
  for (int k = 1; k < 256; ++k) {
    term = (term * a).scaled(Polynomial(Rational(1, k)));
    if (term.is_zero()) return sum;
    sum += term;
  }
  fail(ErrorKind::InsufficientPrecision, "exponential did not terminate; parameters must be truncated");
}

}  // namespace satogr
