#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satogr/rational.hpp"

namespace satogr {

// t_k, t'_k, t''_k carry weight k; parameters carry weight 1 (total degree).
enum class VarKind : std::uint8_t { Time = 0, TimePrime = 1, TimeDoublePrime = 2, Param = 3 };

struct Var {
  VarKind kind = VarKind::Time;
  int index = 1;
  friend auto operator<=>(const Var&, const Var&) = default;
  friend bool operator==(const Var&, const Var&) = default;
};

inline Var tvar(int k) { return {VarKind::Time, k}; }
inline Var param(int k) { return {VarKind::Param, k}; }

inline int var_weight(const Var& v) { return v.kind == VarKind::Param ? 1 : v.index; }

// Sorted by variable, exponents positive.
using Monomial = std::vector<std::pair<Var, int>>;

int monomial_weight(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
std::string monomial_str(const Monomial& m);

constexpr int kExactWeight = std::numeric_limits<int>::max();

// Element of Q[vars] / (weight > maxweight). maxweight = kExactWeight means no truncation.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(int c) : Polynomial(Rational(c)) {}

  static Polynomial variable(Var v, int maxweight = kExactWeight);
  static Polynomial monomial(const Monomial& m, const Rational& c, int maxweight = kExactWeight);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  int maxweight() const { return maxweight_; }
  bool is_exact() const { return maxweight_ == kExactWeight; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff({}); }
  bool is_constant() const;
  int max_term_weight() const;  // -1 for zero

  Polynomial truncated(int w) const;
  Polynomial homogeneous_part(int w) const;
  Polynomial derivative(Var v) const;
  // Replaces every variable of the given kind x by -x.
  Polynomial negate_kind(VarKind k) const;
  Polynomial rename_kind(VarKind from, VarKind to) const;
  // Substitutes listed variables by polynomials; other variables stay.
  Polynomial compose(const std::map<Var, Polynomial>& subs) const;
  Rational evaluate(const std::map<Var, Rational>& at) const;
  Polynomial scaled(const Rational& c) const;

  // Lowest term by (weight, monomial order).
  std::optional<std::pair<Monomial, Rational>> lowest_term() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.maxweight_ == b.maxweight_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
  int maxweight_ = kExactWeight;
};

// True iff a - b vanishes in all weights known to both.
bool agrees(const Polynomial& a, const Polynomial& b);

}  // namespace satogr
