#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "satogr/symfun.hpp"
#include "satogr/tau.hpp"

namespace satogr {

enum class Family { GR0 = 0, P0TRIPLE = 1, CURVE = 2 };
const char* family_name(Family f);

// GR0: Reflected evaluates the t'-factor on tau(-t'); AsPrinted uses tau(t') for both factors.
enum class Gr0Mode { Reflected, AsPrinted };
// P0TRIPLE: AsPrinted keeps the negated strip arguments in the first two factors;
// SignSwapped moves the negation onto the one-row factors there, as in GR0.
enum class TripleMode { AsPrinted, SignSwapped };

struct ConstraintIndex {
  Family family = Family::GR0;
  std::vector<Partition> diagrams;
  std::string str() const;
  friend auto operator<=>(const ConstraintIndex&, const ConstraintIndex&) = default;
};

struct ConstraintResidual {
  ConstraintIndex index;
  Rational value;
  int soundness_weight = 0;  // tau truncation needed
  bool sound = true;         // false: skipped, value meaningless
  bool literal_checked = false;
  bool literal_agrees = true;
};

struct EvalOptions {
  Gr0Mode gr0 = Gr0Mode::Reflected;
  TripleMode triple = TripleMode::AsPrinted;
  bool literal = true;  // also evaluate by repeated differentiation
  int slack = 0;        // extra alpha range beyond the first row, for over-enumeration checks
};

class ConstraintEvaluator {
 public:
  ConstraintEvaluator(const TauFunction& T, EvalOptions opt = {});

  ConstraintResidual gr0(const Partition& l1, const Partition& l2);
  ConstraintResidual p0_triple(const Partition& l1, const Partition& l2, const Partition& l3);
  ConstraintResidual curve(const Partition& l);

  // sum over strips mu of <p_beta(sp x) chi_mu(sd x), tau or tau(-t)>.
  Rational factor(const Partition& lam, int alpha, int beta, SignMode sp, SignMode sd, bool reflected, bool literal);

 private:
  struct Term {
    const Partition* lam;
    int alpha, beta;
    SignMode sp, sd;
    bool reflected;
  };
  void finish(ConstraintResidual& r, const std::vector<std::vector<Term>>& products);

  TauFunction T_;
  Polynomial reflected_;
  EvalOptions opt_;
  std::map<std::tuple<Partition, int, int, int, int, bool, bool>, Rational> memo_;
};

// Single constraints; throw UnsoundTruncation when T is not known to the needed weight.
ConstraintResidual gr0_constraint(const Partition& l1, const Partition& l2, const TauFunction& T, EvalOptions opt = {});
ConstraintResidual p0_triple_constraint(const Partition& l1, const Partition& l2, const Partition& l3, const TauFunction& T,
                                        EvalOptions opt = {});
ConstraintResidual curve_constraint(const Partition& l, const TauFunction& T, EvalOptions opt = {});

struct SuiteOptions {
  std::map<Family, int> maxsize;  // per family diagram-size bound
  EvalOptions eval;
};

struct FamilySummary {
  int evaluated = 0;
  int nonzero = 0;
  int skipped = 0;
  int literal_mismatch = 0;
  std::optional<ConstraintResidual> first_failure;
};

struct SuiteReport {
  std::vector<ConstraintResidual> residuals;  // canonical order
  std::map<Family, FamilySummary> summary;
  bool all_zero() const;
};

SuiteReport constraint_suite(const TauFunction& T, const SuiteOptions& opt);

}  // namespace satogr
