#pragma once

#include <map>
#include <optional>
#include <vector>

#include "satogr/grassmann.hpp"
#include "satogr/linalg.hpp"
#include "satogr/symfun.hpp"

namespace satogr {

struct TauFunction {
  Polynomial poly;  // in t_1, t_2, ...; maxweight = weight
  std::map<Partition, Rational> coeffs;  // Schur coefficients, nonzero ones, |lambda| <= weight
  int weight = 0;
  int index = 0;
  int parity = 0;
  std::optional<bool> isotropic;  // of the source point for sigma_0, when known

  static TauFunction from_coeffs(const std::map<Partition, Rational>& c, int W);
  TauFunction scaled(const Rational& c) const;
};

TauFunction tau(const FramePoint& U, int W);

struct TauBar {
  Polynomial restricted;  // tau at t_2 = t_4 = ... = 0
  Polynomial root;        // r(0) = 1
  Rational lambda;        // tau(0)
};

// Throws OddParity when tau(0) = 0 and NotIsotropic when the source is known not to be.
TauBar tau_bar(const TauFunction& T);

// psi(z, t) = z * sum_i basis[i] * p_{i+1}(t).
struct BakerSeries {
  std::vector<Series> basis;
  int weight = 0;
  VarKind kind = VarKind::Time;
  std::vector<Polynomial> blocks() const;
  PolySeries as_series() const;
};

// The pair_std-orthogonal of U.
FramePoint adjoint_point(const FramePoint& U);
BakerSeries baker(const FramePoint& U, int W);
BakerSeries baker_adjoint(const FramePoint& U, int W);

struct Residual {
  Matrix<Rational> coeffs;  // c_ij multiplying p_{i+1}(t) p_{j+1}(t')
  Polynomial poly;          // exact for t- and t'-weights each <= W
  bool zero = true;
  std::optional<std::pair<Monomial, Rational>> witness;  // lowest-weight nonzero term
};

struct BilinearResult {
  int weight = 0;
  Residual first, second;
  Verdict frame_first;   // pair_std(u, w) = 0 for all u in U, w in U*
  Verdict frame_second;  // pair_std(sigma_0 u, w) = 0 for all u, w
  Verdict sigma_invariant;
  bool literal_checked = false;
  bool literal_agrees = true;
};

BilinearResult bilinear_residues(const FramePoint& U, int W, bool literal = true);

// pair_std(s(u), w) over all u in U, w in V, using the finitely many pairs that can be nonzero.
Verdict pairings_vanish(const FramePoint& U, const FramePoint& V, const SubstitutionMap& s);

}  // namespace satogr
