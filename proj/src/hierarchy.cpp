#include "satogr/hierarchy.hpp"

#include <algorithm>
#include <sstream>

namespace satogr {

const char* family_name(Family f) {
  switch (f) {
    case Family::GR0: return "GR0";
    case Family::P0TRIPLE: return "P0TRIPLE";
    case Family::CURVE: return "CURVE";
  }
  return "?";
}

std::string ConstraintIndex::str() const {
  std::ostringstream os;
  os << family_name(family) << "(";
  for (size_t i = 0; i < diagrams.size(); ++i) os << (i ? "," : "") << diagrams[i].str();
  os << ")";
  return os.str();
}

ConstraintEvaluator::ConstraintEvaluator(const TauFunction& T, EvalOptions opt)
    : T_(T), reflected_(T.poly.negate_kind(VarKind::Time)), opt_(opt) {}

Rational ConstraintEvaluator::factor(const Partition& lam, int alpha, int beta, SignMode sp, SignMode sd, bool reflected, bool literal) {
  auto key = std::make_tuple(lam, alpha, beta, static_cast<int>(sp), static_cast<int>(sd), reflected, literal);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const Polynomial& g = reflected ? reflected_ : T_.poly;
  Polynomial p = h_poly(beta, kExactWeight);
  if (sp == SignMode::Negated) p = p.negate_kind(VarKind::Time);
  Rational s(0);
  for (auto& mu : horizontal_strips(lam, alpha)) {
    SymFun one;
    one.add(mu, Rational(1));
    Polynomial op = p * operator_poly(one, sd);
    s += literal ? literal_at_zero(op, g) : hall_pairing(op, g);
  }
  memo_.emplace(key, s);
  return s;
}

void ConstraintEvaluator::finish(ConstraintResidual& r, const std::vector<std::vector<Term>>& products) {
  int need = 0;
  for (auto& prod : products)
    for (auto& t : prod) need = std::max(need, t.beta + t.lam->weight() - t.alpha);
  r.soundness_weight = need;
  if (need > T_.weight) {
    r.sound = false;
    return;
  }
  auto eval = [&](bool literal) {
    Rational total(0);
    for (auto& prod : products) {
      Rational v(1);
      for (auto& t : prod) {
        v *= factor(*t.lam, t.alpha, t.beta, t.sp, t.sd, t.reflected, literal);
        if (v.is_zero()) break;
      }
      total += v;
    }
    return total;
  };
  r.value = eval(false);
  if (opt_.literal) {
    r.literal_checked = true;
    r.literal_agrees = eval(true) == r.value;
  }
}

ConstraintResidual ConstraintEvaluator::gr0(const Partition& l1, const Partition& l2) {
  ConstraintResidual r;
  r.index = {Family::GR0, {l1, l2}};
  bool refl = opt_.gr0 == Gr0Mode::Reflected;
  std::vector<std::vector<Term>> products;
  for (int a1 = 0; a1 <= l1.first() + opt_.slack; ++a1)
    for (int a2 = 0; a2 <= l2.first() + opt_.slack; ++a2)
      for (int b1 = 0; b1 <= 1 + a1 + a2; ++b1) {
        if ((b1 - a1) % 2) continue;
        int b2 = 1 + a1 + a2 - b1;
        if (horizontal_strips(l1, a1).empty() || horizontal_strips(l2, a2).empty()) continue;
        products.push_back({{&l1, a1, b1, SignMode::Negated, SignMode::Plain, false},
                            {&l2, a2, b2, SignMode::Negated, SignMode::Plain, refl}});
      }
  finish(r, products);
  return r;
}

ConstraintResidual ConstraintEvaluator::p0_triple(const Partition& l1, const Partition& l2, const Partition& l3) {
  ConstraintResidual r;
  r.index = {Family::P0TRIPLE, {l1, l2, l3}};
  bool printed = opt_.triple == TripleMode::AsPrinted;
  SignMode sp12 = printed ? SignMode::Plain : SignMode::Negated;
  SignMode sd12 = printed ? SignMode::Negated : SignMode::Plain;
  std::vector<std::vector<Term>> products;
  for (int a1 = 0; a1 <= l1.first() + opt_.slack; ++a1)
    for (int a2 = 0; a2 <= l2.first() + opt_.slack; ++a2)
      for (int a3 = 0; a3 <= l3.first() + opt_.slack; ++a3) {
        if (horizontal_strips(l1, a1).empty() || horizontal_strips(l2, a2).empty() || horizontal_strips(l3, a3).empty()) continue;
        int total = 2 + a1 + a2 + a3;
        for (int b1 = 0; b1 <= total; ++b1) {
          if ((b1 - a1) % 2) continue;
          for (int b2 = 0; b1 + b2 <= total; ++b2) {
            int b3 = total - b1 - b2;
            products.push_back({{&l1, a1, b1, sp12, sd12, false},
                                {&l2, a2, b2, sp12, sd12, false},
                                {&l3, a3, b3, SignMode::Negated, SignMode::Plain, false}});
          }
        }
      }
  finish(r, products);
  return r;
}

ConstraintResidual ConstraintEvaluator::curve(const Partition& l) {
  ConstraintResidual r;
  r.index = {Family::CURVE, {l}};
  std::vector<std::vector<Term>> products;
  for (int a = 0; a <= l.first() + opt_.slack; ++a) {
    if (horizontal_strips(l, a).empty()) continue;
    products.push_back({{&l, a, a, SignMode::Negated, SignMode::Plain, false}});
  }
  finish(r, products);
  return r;
}

namespace {

ConstraintResidual require_sound(ConstraintResidual r, int W) {
  if (!r.sound)
    fail(ErrorKind::UnsoundTruncation, r.index.str() + " needs tau to weight " + std::to_string(r.soundness_weight) + ", have " + std::to_string(W));
  return r;
}

}  // namespace

ConstraintResidual gr0_constraint(const Partition& l1, const Partition& l2, const TauFunction& T, EvalOptions opt) {
  return require_sound(ConstraintEvaluator(T, opt).gr0(l1, l2), T.weight);
}

ConstraintResidual p0_triple_constraint(const Partition& l1, const Partition& l2, const Partition& l3, const TauFunction& T,
                                        EvalOptions opt) {
  return require_sound(ConstraintEvaluator(T, opt).p0_triple(l1, l2, l3), T.weight);
}

ConstraintResidual curve_constraint(const Partition& l, const TauFunction& T, EvalOptions opt) {
  return require_sound(ConstraintEvaluator(T, opt).curve(l), T.weight);
}

bool SuiteReport::all_zero() const {
  for (auto& [f, s] : summary)
    if (s.nonzero || s.literal_mismatch) return false;
  return true;
}

SuiteReport constraint_suite(const TauFunction& T, const SuiteOptions& opt) {
  SuiteReport rep;
  ConstraintEvaluator ev(T, opt.eval);
  auto record = [&](ConstraintResidual r) {
    auto& s = rep.summary[r.index.family];
    if (!r.sound) {
      ++s.skipped;
    } else {
      ++s.evaluated;
      if (!r.value.is_zero()) {
        ++s.nonzero;
        if (!s.first_failure) s.first_failure = r;
      }
      if (r.literal_checked && !r.literal_agrees) ++s.literal_mismatch;
    }
    rep.residuals.push_back(std::move(r));
  };
  for (Family f : {Family::GR0, Family::P0TRIPLE, Family::CURVE}) {
    auto it = opt.maxsize.find(f);
    if (it == opt.maxsize.end()) continue;
    rep.summary[f];
    auto ps = partitions_up_to(it->second);
    if (f == Family::GR0) {
      for (auto& a : ps)
        for (auto& b : ps) record(ev.gr0(a, b));
    } else if (f == Family::P0TRIPLE) {
      for (auto& a : ps)
        for (auto& b : ps)
          for (auto& c : ps) record(ev.p0_triple(a, b, c));
    } else {
      for (auto& a : ps) record(ev.curve(a));
    }
  }
  return rep;
}

}  // namespace satogr
