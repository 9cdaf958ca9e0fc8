#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omt/element.hpp"
#include "omt/proposition.hpp"
#include "omt/quantifier.hpp"
#include "omt/report.hpp"
#include "omt/tense.hpp"
#include "omt/timeframe.hpp"

namespace omt {

class Oml;

/// Expression over quantified propositions, tense operators and the
/// pointwise lattice connectives.
class Term {
 public:
  static Term var(std::size_t index, std::string name);
  static Term constant(Element value, std::string label);
  static Term apply(const TenseOperator& A, const Term& arg);
  static Term sand(const Term& x, const Term& y);
  static Term simp(const Term& x, const Term& y);
  static Term meet(const Term& x, const Term& y);
  static Term join(const Term& x, const Term& y);
  static Term comp(const Term& x);

  std::string to_string() const;

  struct Node;
  const Node& node() const noexcept { return *node_; }

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Cmp { Leq, Eq };

/// For all assignments of `vars`: premise (if any) implies lhs cmp rhs,
/// compared at every time point.
struct Law {
  std::string name;
  std::vector<std::string> vars;
  std::optional<std::pair<Term, Term>> premise;
  Term lhs;
  Cmp cmp = Cmp::Leq;
  Term rhs;

  std::string statement() const;
};

/// One quantification domain (lattice, time set, quantifier settings) plus
/// a cache of operator tables shared by all laws checked in it.
class LawContext {
 public:
  LawContext(const Oml& L, TimeSet points, Quantifier quant);

  const Oml& lattice() const noexcept { return *L_; }
  const TimeSet& points() const noexcept { return points_; }
  const PropositionSpace& space() const noexcept { return space_; }
  const Quantifier& quantifier() const noexcept { return quant_; }

  /// Tabulates A over the whole space when the space is within budget.
  const OperatorTable* table(const TenseOperator& A);

 private:
  const Oml* L_;
  TimeSet points_;
  PropositionSpace space_;
  Quantifier quant_;
  std::map<const void*, std::pair<TenseOperator, std::unique_ptr<OperatorTable>>> tables_;
};

/// Truth of a law: Pass, Fail (with the first counterexample in odometer
/// order and a replayable witness) or OneSided when sampled.
CheckResult check_law(LawContext& ctx, const Law& law);

/// Evaluates a term on concrete propositions, directly from the
/// definitions; used for witness replay and tests.
Proposition evaluate(const Oml& L, const Term& term, const std::vector<Proposition>& assignment);

/// Every subterm of `law` with its value under `assignment`, innermost first.
std::vector<std::string> trace_law(const Oml& L, const Law& law, const TimeSet& points,
                                   const std::vector<Proposition>& assignment);

}  // namespace omt
