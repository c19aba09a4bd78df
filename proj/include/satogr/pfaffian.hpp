#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satogr/grassmann.hpp"
#include "satogr/linalg.hpp"

namespace satogr {

template <class R>
void require_alternating(const Matrix<R>& m) {
  size_t n = m.size();
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(ErrorKind::NotAlternating, "matrix is not square");
    if (!m[i][i].is_zero()) fail(ErrorKind::NotAlternating, "nonzero diagonal entry");
    for (size_t j = 0; j < i; ++j)
      if (!(m[i][j] + m[j][i]).is_zero()) fail(ErrorKind::NotAlternating, "M^T != -M");
  }
}

// First-row expansion Pf(M) = sum_j (-1)^j m_1j Pf(M_1j), memoised over index subsets.
template <class R>
R pfaffian(const Matrix<R>& m) {
  require_alternating(m);
  int n = static_cast<int>(m.size());
  if (n % 2) return R(0);
  if (n == 0) return R(1);
  std::vector<std::optional<R>> memo(std::size_t(1) << n);
  auto rec = [&](auto&& self, std::uint32_t mask) -> R {
    if (mask == 0) return R(1);
    if (memo[mask]) return *memo[mask];
    int i = __builtin_ctz(mask);
    std::uint32_t rest = mask & ~(1u << i);
    R acc(0);
    int pos = 0;
    for (int j = i + 1; j < n; ++j) {
      if (!(rest >> j & 1)) continue;
      ++pos;
      if (m[i][j].is_zero()) continue;
      R term = m[i][j] * self(self, rest & ~(1u << j));
      if (pos % 2) acc += term;
      else acc -= term;
    }
    memo[mask] = acc;
    return acc;
  };
  return rec(rec, (n == 32 ? 0u : (1u << n)) - 1u);
}

Matrix<Rational> gram(const std::vector<Series>& vectors, const SubstitutionMap& s);

// Nondegeneracy of the pairing between B/(A n B) and A/(A n B) for two isotropic points.
Verdict mti_duality_check(const FramePoint& A, const FramePoint& B);

// A family of index-0 frames over Q[a_1..a_r]/(deg > maxdeg): g(a) applied to a base point,
// or explicit polynomial generators with a monomial tail (g = 1).
struct ParamFamily {
  std::vector<std::string> params;
  FlowedFrame<Polynomial> frame;
  int maxdeg = 6;
};

ParamFamily flow_family(const FramePoint& base, const PolySeries& g, std::vector<std::string> params, int maxdeg);

struct SquareResult {
  bool is_square = false;
  Polynomial section;  // pi_empty(a)
  Polynomial root;     // r with r(0) = 1
  Rational lambda;     // pi_empty(0)
  int parity = 0;
  std::string witness;
  Monomial witness_monomial;
  Rational witness_value;
};

// Homogeneous-by-degree square root of f with f(0) = 1, kept to degree `deg`.
Polynomial graded_sqrt(const Polynomial& f, int deg);

// Decides pi_empty(a) = lambda r(a)^2 with deg r <= maxdeg/2. Throws NotAFamily when the family
// is not isotropic. Odd parity is reported in the result.
SquareResult section_square_check(const ParamFamily& F, int maxdeg);
// Same, but throws NonSquareWitness on failure.
SquareResult section_square_check_strict(const ParamFamily& F, int maxdeg);

}  // namespace satogr
