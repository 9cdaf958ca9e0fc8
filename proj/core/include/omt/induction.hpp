#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omt/proposition.hpp"
#include "omt/quantifier.hpp"
#include "omt/report.hpp"
#include "omt/tense.hpp"
#include "omt/timeframe.hpp"

namespace omt {

class Oml;

/// Why a pair (s, t) was left out: the first q (in case order) for which
/// one of the defining inequalities `lhs <= rhs` fails.
struct ExcludedPair {
  TimePoint s;
  TimePoint t;
  Proposition q;
  std::uint64_t case_index = 0;
  std::string inequality;
  Element lhs;
  Element rhs;
};

/// Relation induced by given operators.
///
/// In sampled mode the relation is an upper bound: a pair is kept unless a
/// sampled proposition refutes it.
struct InducedRelationReport {
  Relation relation;
  bool exhaustive = true;
  std::uint64_t cases = 0;
  std::vector<ExcludedPair> excluded;  // in (s, t) order

  /// Throws Error(EmptyRelation) when no pair survived.
  TimeFrame frame(const TimeSet& points, std::string name) const;
};

/// R1 = {(s,t) | q(s) <= P(q)(t) and q(t) <= F(q)(s) for all q}
InducedRelationReport induce_R1(const Oml& L, const TenseOperator& P, const TenseOperator& F,
                                const Quantifier& quant = {});
/// R2 = {(s,t) | H(q)(t) <= q(s) and G(q)(s) <= q(t) for all q}
InducedRelationReport induce_R2(const Oml& L, const TenseOperator& H, const TenseOperator& G,
                                const Quantifier& quant = {});
/// R3 = R1 n R2
InducedRelationReport induce_R3(const Oml& L, const OperatorQuadruple& ops, const Quantifier& quant = {});

/// q_u(t) = 1 if t = u, 0 otherwise. Throws Error(UnknownTimePoint).
Proposition indicator_proposition(const Oml& L, std::size_t points, TimePoint u);
Proposition indicator_proposition(const Oml& L, const TimeSet& points, std::string_view u);

/// Frame -> induced operators -> induced relation must give the frame back,
/// and operators induced by the recovered relation must coincide with the
/// originals. Requires exhaustive enumeration.
VerifyReport roundtrip_frame(const Oml& L, const TimeFrame& f, const Quantifier& quant = {});

struct InducibilityWitness {
  TenseKind op;
  Proposition q;
  TimePoint s;
  Element given;
  Element induced;
};

struct InducibilityVerdict {
  bool frame_induced = false;
  Relation relation;                           // R3 of the given operators
  std::optional<InducibilityWitness> witness;  // set when not frame-induced
};

/// Frame-induced exactly when the operators induced by R3 coincide with
/// the given ones; otherwise no frame at all induces them. Requires
/// exhaustive enumeration.
InducibilityVerdict classify_inducibility(const Oml& L, const OperatorQuadruple& ops, const Quantifier& quant = {});

/// P* <= P, F* <= F, H <= H*, G <= G* with starred operators induced by R3.
/// Each check's detail says whether the inequality is strict.
VerifyReport check_star_inequalities(const Oml& L, const OperatorQuadruple& ops, const Quantifier& quant = {});
/// P* <= P and F* <= F with starred operators induced by R1 alone.
VerifyReport check_star_inequalities_R1(const Oml& L, const TenseOperator& P, const TenseOperator& F, const Quantifier& quant = {});
/// H <= H* and G <= G* with starred operators induced by R2 alone.
VerifyReport check_star_inequalities_R2(const Oml& L, const TenseOperator& H, const TenseOperator& G, const Quantifier& quant = {});

}  // namespace omt
