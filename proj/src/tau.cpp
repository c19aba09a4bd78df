#include "satogr/tau.hpp"

namespace satogr {

TauFunction TauFunction::from_coeffs(const std::map<Partition, Rational>& c, int W) {
  TauFunction T;
  T.weight = W;
  T.poly = Polynomial().truncated(W);
  for (auto& [p, x] : c) {
    if (p.weight() > W || x.is_zero()) continue;
    T.coeffs.emplace(p, x);
    T.poly += schur_poly(p, W).scaled(x);
  }
  T.poly = T.poly.truncated(W);
  return T;
}

TauFunction TauFunction::scaled(const Rational& c) const {
  std::map<Partition, Rational> m;
  for (auto& [p, x] : coeffs) m.emplace(p, x * c);
  TauFunction T = from_coeffs(m, weight);
  T.index = index;
  T.parity = parity;
  T.isotropic = isotropic;
  return T;
}

TauFunction tau(const FramePoint& U, int W) {
  if (U.index() != 0) fail(ErrorKind::NonzeroIndex, "tau needs index 0, point has index " + std::to_string(U.index()));
  std::map<Partition, Rational> c;
  for (auto& p : partitions_up_to(W)) {
    Rational x = plucker(U, p);
    if (!x.is_zero()) c.emplace(p, x);
  }
  TauFunction T = TauFunction::from_coeffs(c, W);
  T.index = U.index();
  T.parity = U.parity();
  auto iso = is_isotropic(U, SubstitutionMap::sigma0());
  T.isotropic = iso.verdict.holds;
  return T;
}

TauBar tau_bar(const TauFunction& T) {
  if (T.isotropic && !*T.isotropic) fail(ErrorKind::NotIsotropic, "tau-bar needs an isotropic point");
  std::map<Var, Polynomial> zero_even;
  for (int k = 2; k <= T.weight; k += 2) zero_even.emplace(tvar(k), Polynomial());
  TauBar out;
  out.restricted = T.poly.compose(zero_even).truncated(T.weight);
  out.lambda = out.restricted.constant_term();
  if (out.lambda.is_zero()) fail(ErrorKind::OddParity, "tau(0) = 0 (parity " + std::to_string(T.parity) + "); no square root normalised at 0");
  Polynomial f = out.restricted.scaled(out.lambda.inverse());
  std::vector<Polynomial> r(T.weight + 1);
  r[0] = Polynomial(Rational(1));
  out.root = r[0];
  for (int w = 1; w <= T.weight; ++w) {
    Polynomial acc = f.homogeneous_part(w);
    for (int i = 1; i < w; ++i) acc -= r[i] * r[w - i];
    r[w] = acc.scaled(Rational(1, 2));
    out.root += r[w];
  }
  out.root = out.root.truncated(T.weight);
  return out;
}

std::vector<Polynomial> BakerSeries::blocks() const {
  std::vector<Polynomial> b;
  for (size_t i = 0; i < basis.size(); ++i) b.push_back(h_poly(static_cast<int>(i) + 1, kExactWeight, kind));
  return b;
}

PolySeries BakerSeries::as_series() const {
  PolySeries psi;
  auto b = blocks();
  for (size_t i = 0; i < basis.size(); ++i) psi += lift<Polynomial>(basis[i].shifted(1)).scaled(b[i]);
  return psi;
}

FramePoint adjoint_point(const FramePoint& U) { return orthogonal(U, SubstitutionMap::identity()); }

BakerSeries baker(const FramePoint& U, int W) {
  BakerSeries b;
  b.basis = U.basis_descending(W);
  b.weight = W;
  b.kind = VarKind::Time;
  return b;
}

BakerSeries baker_adjoint(const FramePoint& U, int W) {
  BakerSeries b;
  b.basis = adjoint_point(U).basis_descending(W);
  b.weight = W;
  b.kind = VarKind::TimePrime;
  return b;
}

namespace {

std::vector<Series> relevant_vectors(const FramePoint& U, int partner_max) {
  std::vector<Series> v = U.gens();
  // z^-j pairs with the partner only through its coefficient at j - 1.
  for (int j = U.tail() + 1; j <= partner_max + 1; ++j) v.push_back(Series::monomial(-j));
  return v;
}

Residual make_residual(Matrix<Rational> c, const BakerSeries& a, const BakerSeries& b) {
  Residual r;
  auto pa = a.blocks(), pb = b.blocks();
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j)
      if (!c[i][j].is_zero()) r.poly += (pa[i] * pb[j]).scaled(c[i][j]);
  r.coeffs = std::move(c);
  r.zero = r.poly.is_zero();
  r.witness = r.poly.lowest_term();
  return r;
}

}  // namespace

Verdict pairings_vanish(const FramePoint& U, const FramePoint& V, const SubstitutionMap& s) {
  Verdict v;
  v.certified = U.exact() && V.exact();
  auto us = relevant_vectors(U, V.max_exponent());
  auto vs = relevant_vectors(V, U.max_exponent());
  for (size_t i = 0; i < us.size(); ++i)
    for (size_t j = 0; j < vs.size(); ++j) {
      Rational p = pair_std(substitute(us[i], s), vs[j]);
      if (!p.is_zero()) {
        v.holds = false;
        v.value = p;
        v.witness = "pairing of " + series_str(us[i]) + " with " + series_str(vs[j]) + " is " + p.str();
        return v;
      }
    }
  return v;
}

BilinearResult bilinear_residues(const FramePoint& U, int W, bool literal) {
  BilinearResult out;
  out.weight = W;
  auto s0 = SubstitutionMap::sigma0();
  FramePoint Us = adjoint_point(U);
  BakerSeries psi = baker(U, W), psis = baker_adjoint(U, W);
  size_t n = psi.basis.size();
  Matrix<Rational> c1(n, std::vector<Rational>(n, Rational(0))), c2 = c1;
  for (size_t i = 0; i < n; ++i) {
    Series su = substitute(psi.basis[i], s0);
    for (size_t j = 0; j < n; ++j) {
      c1[i][j] = pair_std(psi.basis[i], psis.basis[j]);
      // psi(-z) = -z sum u_i(-z) p_i
      c2[i][j] = -pair_std(su, psis.basis[j]);
    }
  }
  out.first = make_residual(c1, psi, psis);
  out.second = make_residual(c2, psi, psis);
  out.frame_first = pairings_vanish(U, Us, SubstitutionMap::identity());
  out.frame_second = pairings_vanish(U, Us, s0);
  out.sigma_invariant = is_sigma_invariant(U, s0);
  if (literal) {
    PolySeries a = psi.as_series(), b = psis.as_series();
    PolySeries zm2 = PolySeries::monomial(-2, Polynomial(Rational(1)));
    Polynomial r1 = residue(a * b * zm2);
    Polynomial r2 = residue(substitute(a, s0) * b * zm2);
    out.literal_checked = true;
    out.literal_agrees = (r1 - out.first.poly).is_zero() && (r2 - out.second.poly).is_zero();
  }
  return out;
}

}  // namespace satogr
