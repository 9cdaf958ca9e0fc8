#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omt/quantifier.hpp"
#include "omt/report.hpp"
#include "omt/tense.hpp"
#include "omt/timeframe.hpp"

namespace omt {

class Oml;

enum class SuiteId {
  Thm1,
  Thm2,
  Thm3,
  Prop1,
  Lemma1,
  Thm6,
  Thm7,
  Thm4Roundtrip,
  Cor1,
  ExtPf,
  ExtHg,
  DeMorgan,
  OmlLaw,
};

inline constexpr std::array<SuiteId, 13> kAllSuites{
    SuiteId::Thm1,  SuiteId::Thm2,          SuiteId::Thm3, SuiteId::Prop1, SuiteId::Lemma1,
    SuiteId::Thm6,  SuiteId::Thm7,          SuiteId::Thm4Roundtrip,        SuiteId::Cor1,
    SuiteId::ExtPf, SuiteId::ExtHg,         SuiteId::DeMorgan,             SuiteId::OmlLaw,
};

std::string_view to_string(SuiteId id);
/// Accepts the identifiers printed by to_string ("thm4-roundtrip", ...).
std::optional<SuiteId> parse_suite(std::string_view name);

/// What a suite runs on besides the lattice. Suites about frame-induced
/// operators need `frame`; suites about given operators use `ops` when set
/// and the frame-induced quadruple otherwise.
struct SuiteInstance {
  TimeSet points;
  std::optional<TimeFrame> frame;
  std::optional<OperatorQuadruple> ops;
  /// Further operators examined by thm6.
  std::vector<TenseOperator> extra;
  Quantifier quant;

  static SuiteInstance of_frame(TimeFrame f, Quantifier quant = {});
  static SuiteInstance of_ops(TimeSet points, OperatorQuadruple ops, Quantifier quant = {});
};

/// Runs one suite. Unmet preconditions give a single Skipped check whose
/// detail names the missing property.
VerifyReport run_suite(SuiteId id, const Oml& L, const SuiteInstance& instance);

/// Truth of "A(x)*A(y) <= A(x*y) for all x,y" against truth of
/// "A(x->y) <= A(x)->A(y) for all x,y"; passes when both agree.
VerifyReport check_thm6_equivalence(const Oml& L, const TimeSet& points, const TenseOperator& A,
                                    const Quantifier& quant = {});

/// Re-evaluates the first failing check's witness. Throws
/// Error(NotAFailure) when the report has no failure.
std::vector<std::string> replay_witness(const Oml& L, const VerifyReport& report);

}  // namespace omt
