#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satogr/grassmann.hpp"

namespace satogr {

struct CurveData {
  std::vector<Series> ring_gens;    // beyond the constants, negative valuation
  std::vector<Series> module_gens;  // empty means the module is the ring itself
  std::optional<SubstitutionMap> involution;
  std::string label;
};

// Subspace spanned by ring monomials times module generators, with pole order up to the window radius.
// Throws NotClosed when the monomial tail does not settle or the ring does not preserve the span.
FramePoint span_closure(const CurveData& data, Window w = {});

Verdict is_ring_point(const FramePoint& U);
Verdict p0_membership(const FramePoint& U);

// Basis of {f in span{z^-n..z^n} : f U in U}, by descending leading exponent.
std::vector<Series> stabilizer(const FramePoint& U, int n);

struct OrbitProfile {
  std::vector<int> d;  // d[n-1] for n = 1..nmax
  bool odd_only = false;
  bool stabilized = false;
  int stable_from = 0;
  std::optional<int> genus;
  std::string verdict() const { return stabilized ? "stabilized" : "inconclusive"; }
};

OrbitProfile orbit_profile(const FramePoint& U, int nmax, bool odd_only);

// Even part of a sigma0-invariant ring point, in w = z^2.
FramePoint quotient_ring(const FramePoint& U);

// w = z + a2 z^2 + ... with w(s(z)) = -w(z) through z^order. Odd coefficients past the first are set to 0.
SubstitutionMap normalize_involution(const SubstitutionMap& s, int order = 8);

}  // namespace satogr
