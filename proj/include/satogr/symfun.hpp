#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "satogr/polynomial.hpp"

namespace satogr {

struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);  // validates and drops zeros

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  int first() const { return parts.empty() ? 0 : parts[0]; }
  int part(int i) const { return i < length() ? parts[i] : 0; }  // 0-based
  Partition conjugate() const;
  std::string str() const;  // "[2,1]"

  // Weight first, then lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
};

std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> partitions_up_to(int n);
std::vector<Partition> horizontal_strips(const Partition& lam, int alpha);

// Coefficient of z^beta in exp(sum_k t_k z^k).
Polynomial h_poly(int beta, int W, VarKind kind = VarKind::Time);
Polynomial schur_poly(const Partition& lam, int W, VarKind kind = VarKind::Time);

struct SymFun {
  std::map<Partition, Rational> terms;
  SymFun& add(const Partition& p, const Rational& c);
  int weight() const;  // max weight of a basis label, -1 when zero
};

SymFun d_operator(const Partition& lam, int alpha);

enum class SignMode { Plain, Negated };

// Polynomial in the symbol variables (t_k standing for the scaled derivative d/dt_k / k).
Polynomial operator_poly(const SymFun& op, SignMode sign);

// <op, g> with <t^m, t^m> = prod m_k! / k^m_k.
Rational hall_pairing(const Polynomial& op, const Polynomial& g);
// Applies op(d/dt_1, 1/2 d/dt_2, ...) to g by repeated differentiation and reads off t = 0.
Rational literal_at_zero(const Polynomial& op, const Polynomial& g);

Rational apply_at_zero(const SymFun& op, SignMode sign, const Polynomial& g);
Rational apply_at_zero_literal(const SymFun& op, SignMode sign, const Polynomial& g);

// Expands a weight-homogeneous-by-parts time polynomial in the Schur basis (exact for weights <= max).
SymFun schur_expand(const Polynomial& g, int maxweight);

}  // namespace satogr
