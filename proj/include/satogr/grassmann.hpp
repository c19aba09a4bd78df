#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "satogr/linalg.hpp"
#include "satogr/series.hpp"
#include "satogr/symfun.hpp"

namespace satogr {

struct Window {
  int lo = -kDefaultWindow;
  int hi = kDefaultWindow;
  static Window radius(int r) { return {-r, r}; }
  friend bool operator==(const Window&, const Window&) = default;
};

// Outcome of a predicate. `certified` is false when the answer only holds inside the window.
struct Verdict {
  bool holds = true;
  bool certified = true;
  std::string witness;
  Rational value;  // nonzero pairing or residue behind a failure, when there is one
};

// U = span(gens) + span{z^-j : j > tail}. Generators are kept in reduced echelon form,
// ordered by increasing pivot (valuation), monic, each pivot absent from the others.
class FramePoint {
 public:
  FramePoint() = default;
  // Throws DependentGenerators when a generator reduces to zero.
  static FramePoint make(const std::vector<Series>& gens, int tail, Window w = {}, bool exact = true);
  // Like make, but silently drops generators already in the span.
  static FramePoint span(const std::vector<Series>& gens, int tail, Window w = {}, bool exact = true);
  static FramePoint vacuum(Window w = {}) { return make({}, 0, w); }

  const std::vector<Series>& gens() const { return gens_; }
  int tail() const { return tail_; }
  const Window& window() const { return window_; }
  bool exact() const { return exact_; }

  std::vector<int> pivots() const;
  int index() const { return static_cast<int>(gens_.size()) - tail_; }
  int parity() const;
  // Largest exponent carried by an explicit generator; -tail-1 when there are none.
  int max_exponent() const;
  // S(U) intersected with [floor, infinity).
  std::set<int> maya(int floor) const;
  Partition partition() const;

  // Remainder of v modulo U, supported on non-pivot exponents >= -tail.
  Series reduce(const Series& v) const;
  bool contains(const Series& v) const { return reduce(v).is_zero(); }
  // Basis read off by descending valuation: explicit generators then tail monomials, `count` vectors.
  std::vector<Series> basis_descending(int count) const;

  friend bool operator==(const FramePoint& a, const FramePoint& b) {
    return a.tail_ == b.tail_ && a.gens_ == b.gens_;
  }

 private:
  static FramePoint build(const std::vector<Series>& gens, int tail, Window w, bool exact, bool allow_dependent);
  std::vector<Series> gens_;
  int tail_ = 0;
  Window window_;
  bool exact_ = true;
};

inline FramePoint normalize(const std::vector<Series>& gens, int tail, Window w = {}) { return FramePoint::make(gens, tail, w); }

Rational plucker(const FramePoint& U, const Partition& lam);
// Throws IndexMismatch when `charge` differs from index(U).
Rational plucker(const FramePoint& U, const Partition& lam, int charge);
// Plücker coordinate for an explicit charge-index(U) Maya set given by its part above `floor`.
Rational plucker_subset(const FramePoint& U, const std::vector<int>& cols_ascending, int floor);

FramePoint flow(const FramePoint& U, const Series& g);

Verdict is_sigma_invariant(const FramePoint& U, const SubstitutionMap& s);
FramePoint orthogonal(const FramePoint& U, const SubstitutionMap& s);

struct IsotropyResult {
  Verdict verdict;
  int parity = 0;
};
IsotropyResult is_isotropic(const FramePoint& U, const SubstitutionMap& s);

std::pair<FramePoint, FramePoint> split_even_odd(const FramePoint& U);
FramePoint merge_even_odd(const FramePoint& even, const FramePoint& odd);

// exp(a) for a series whose coefficients are nilpotent in the truncated parameter ring.
PolySeries exp_nilpotent(const PolySeries& a);

template <class R>
Verdict is_prym_flow(const LaurentSeries<R>& g, const SubstitutionMap& s) {
  Verdict v;
  if (g.is_zero()) fail(ErrorKind::ZeroInput, "flow element is zero");
  LaurentSeries<R> prod = g * substitute(g, s, std::max(kDefaultWindow, g.max_exponent() - g.low() + 1));
  LaurentSeries<R> d = prod - LaurentSeries<R>::constant(R(1));
  v.certified = prod.is_exact();
  if (!d.is_zero()) {
    v.holds = false;
    v.witness = "g*sigma(g) has coefficient at z^" + std::to_string(d.coeffs().begin()->first);
  }
  return v;
}

// g.U with the tail transported: the tail is g * z^-j for j > tail. Requires g = 1 + lower terms.
template <class R>
struct FlowedFrame {
  std::vector<LaurentSeries<R>> gens;
  LaurentSeries<R> g = LaurentSeries<R>::constant(R(1));
  int tail = 0;
};

template <class R>
FlowedFrame<R> flow_frame(const FramePoint& U, const LaurentSeries<R>& g) {
  if (g.max_exponent() > 0 || !(g.coeff(0) - R(1)).is_zero())
    fail(ErrorKind::InsufficientPrecision, "transported frames need g = 1 + (negative powers)");
  FlowedFrame<R> f;
  f.g = g;
  f.tail = U.tail();
  for (auto& u : U.gens()) f.gens.push_back(g * lift<R>(u));
  return f;
}

// pi_empty of a transported index-0 frame: the minor on columns -tail..-1.
template <class R>
R vacuum_section(const FlowedFrame<R>& f) {
  int J = f.tail;
  if (static_cast<int>(f.gens.size()) != J) fail(ErrorKind::NonzeroIndex, "vacuum section needs index 0");
  Matrix<R> m(J, std::vector<R>(J, R(0)));
  for (int r = 0; r < J; ++r)
    for (int k = 0; k < J; ++k) m[r][k] = f.gens[r].coeff(-J + k);
  return det_expand(m);
}

template <class R>
struct FamilyIsotropy {
  bool holds = true;
  std::string witness;
  R value = R(0);
};

template <class R>
FamilyIsotropy<R> family_isotropic(const FlowedFrame<R>& f, const SubstitutionMap& s) {
  FamilyIsotropy<R> out;
  if (static_cast<int>(f.gens.size()) != f.tail) {
    out.holds = false;
    out.witness = "index " + std::to_string(static_cast<int>(f.gens.size()) - f.tail);
    return out;
  }
  int H = -f.tail - 1;
  for (auto& u : f.gens) H = std::max(H, u.max_exponent());
  std::vector<std::pair<std::string, LaurentSeries<R>>> vecs;
  for (size_t i = 0; i < f.gens.size(); ++i) vecs.emplace_back("u" + std::to_string(i), f.gens[i]);
  for (int j = f.tail + 1; j <= H + 1; ++j)
    vecs.emplace_back("tail z^-" + std::to_string(j), f.g * LaurentSeries<R>::monomial(-j));
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t k = 0; k < vecs.size(); ++k) {
      if (i >= f.gens.size() && k >= f.gens.size()) continue;
      R p = pair_sigma(vecs[i].second, vecs[k].second, s);
      if (!p.is_zero()) {
        out.holds = false;
        out.witness = "<" + vecs[i].first + ", " + vecs[k].first + ">";
        out.value = p;
        return out;
      }
    }
  return out;
}

}  // namespace satogr
