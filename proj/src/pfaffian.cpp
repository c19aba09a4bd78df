#include "satogr/pfaffian.hpp"

namespace satogr {

Matrix<Rational> gram(const std::vector<Series>& v, const SubstitutionMap& s) {
  size_t n = v.size();
  Matrix<Rational> g(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g[i][j] = pair_sigma(v[i], v[j], s);
  return g;
}

namespace {

// Finite part of a point below z^-D: its generators plus tail monomials down to depth D.
std::vector<Series> finite_part(const FramePoint& U, int D) {
  std::vector<Series> out = U.gens();
  for (int j = U.tail() + 1; j <= D; ++j) out.push_back(Series::monomial(-j));
  return out;
}

std::vector<Rational> coords(const Series& s, int lo, int hi) {
  std::vector<Rational> c(hi - lo, Rational(0));
  for (auto& [e, x] : s.coeffs())
    if (e >= lo && e < hi) c[e - lo] = x;
  return c;
}

// Picks vectors from `pool` extending `base` to a basis of span(base + pool).
std::vector<Series> complement(const std::vector<std::vector<Rational>>& base, const std::vector<Series>& pool, int lo, int hi) {
  Matrix<Rational> m = base;
  int r = rank(m);
  std::vector<Series> out;
  for (auto& p : pool) {
    m.push_back(coords(p, lo, hi));
    int r2 = rank(m);
    if (r2 > r) {
      out.push_back(p);
      r = r2;
    } else {
      m.pop_back();
    }
  }
  return out;
}

}  // namespace

Verdict mti_duality_check(const FramePoint& A, const FramePoint& B) {
  auto s = SubstitutionMap::sigma0();
  for (auto* P : {&A, &B}) {
    auto iso = is_isotropic(*P, s);
    if (!iso.verdict.holds) fail(ErrorKind::NotIsotropic, iso.verdict.witness);
  }
  int D = std::max(A.tail(), B.tail());
  int lo = -D, hi = std::max(A.max_exponent(), B.max_exponent()) + 1;
  if (hi <= lo) hi = lo + 1;
  auto a = finite_part(A, D), b = finite_part(B, D);
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  int n = hi - lo;
  // Kernel of [a | -b] gives A n B.
  Matrix<Rational> m(n, std::vector<Rational>(na + nb, Rational(0)));
  for (int k = 0; k < na; ++k) {
    auto c = coords(a[k], lo, hi);
    for (int e = 0; e < n; ++e) m[e][k] = c[e];
  }
  for (int k = 0; k < nb; ++k) {
    auto c = coords(b[k], lo, hi);
    for (int e = 0; e < n; ++e) m[e][na + k] = -c[e];
  }
  std::vector<std::vector<Rational>> inter;
  for (auto& x : nullspace(m, na + nb)) {
    std::vector<Rational> v(n, Rational(0));
    for (int k = 0; k < na; ++k)
      for (int e = 0; e < n; ++e) v[e] += x[k] * m[e][k];
    inter.push_back(v);
  }
  auto rb = complement(inter, b, lo, hi);
  auto ra = complement(inter, a, lo, hi);
  Verdict v;
  if (rb.size() != ra.size()) {
    v.holds = false;
    v.witness = "quotients have dimensions " + std::to_string(rb.size()) + " and " + std::to_string(ra.size());
    return v;
  }
  size_t k = rb.size();
  Matrix<Rational> p(k, std::vector<Rational>(k, Rational(0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) p[i][j] = pair_sigma(rb[i], ra[j], s);
  Rational d = det(p);
  v.value = d;
  if (d.is_zero()) {
    v.holds = false;
    v.witness = "pairing between coset representatives is degenerate";
  } else {
    v.witness = std::to_string(k) + "x" + std::to_string(k) + " pairing, det " + d.str();
  }
  return v;
}

ParamFamily flow_family(const FramePoint& base, const PolySeries& g, std::vector<std::string> params, int maxdeg) {
  ParamFamily F;
  F.params = std::move(params);
  F.maxdeg = maxdeg;
  F.frame = flow_frame(base, g);
  return F;
}

Polynomial graded_sqrt(const Polynomial& f, int deg) {
  std::vector<Polynomial> parts(deg + 1), r(deg + 1);
  for (int w = 0; w <= deg; ++w) parts[w] = f.homogeneous_part(w);
  r[0] = Polynomial(Rational(1));
  Polynomial root = r[0];
  for (int w = 1; w <= deg; ++w) {
    Polynomial acc = parts[w];
    for (int i = 1; i < w; ++i) acc -= r[i] * r[w - i];
    r[w] = acc.scaled(Rational(1, 2));
    root += r[w];
  }
  return root;
}

SquareResult section_square_check(const ParamFamily& F, int maxdeg) {
  auto iso = family_isotropic(F.frame, SubstitutionMap::sigma0());
  if (!iso.holds) fail(ErrorKind::NotAFamily, "family is not isotropic: " + iso.witness + " = " + iso.value.str());
  SquareResult out;
  std::vector<Series> base;
  for (auto& u : F.frame.gens) base.push_back(constant_part(u));
  out.parity = FramePoint::make(base, F.frame.tail).parity();
  Polynomial pi = vacuum_section(F.frame).truncated(maxdeg);
  out.section = pi;
  out.lambda = pi.constant_term();
  if (out.lambda.is_zero()) {
    out.witness = "section vanishes at the base point";
    return out;
  }
  int half = maxdeg / 2;
  out.root = graded_sqrt(pi.scaled(out.lambda.inverse()), half);
  Polynomial sq = (out.root * out.root).scaled(out.lambda);
  Polynomial diff = pi - sq.truncated(maxdeg);
  diff = diff.truncated(maxdeg);
  if (auto t = diff.lowest_term()) {
    out.witness_monomial = t->first;
    out.witness_value = t->second;
    out.witness = "pi - lambda r^2 has coefficient " + t->second.str() + " at " + monomial_str(t->first);
    return out;
  }
  out.is_square = true;
  return out;
}

SquareResult section_square_check_strict(const ParamFamily& F, int maxdeg) {
  SquareResult r = section_square_check(F, maxdeg);
  if (!r.is_square) fail(ErrorKind::NonSquareWitness, r.witness);
  return r;
}

}  // namespace satogr
