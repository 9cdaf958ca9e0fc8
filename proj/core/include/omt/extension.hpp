#pragma once

#include <cstddef>
#include <vector>

#include "omt/proposition.hpp"
#include "omt/quantifier.hpp"
#include "omt/report.hpp"
#include "omt/tense.hpp"
#include "omt/timeframe.hpp"

namespace omt {

class Oml;

enum class Zone { Past, Base, Future };

/// T-bar = T1 u T u T2 with R-bar = {(s1,s)} u R u {(s,s2)}.
///
/// Points are laid out as the past copies, then T, then the future copies,
/// each block in the order of T. Copies of `t` are named `t1` and `t2`.
struct ExtendedFrame {
  TimeSet base_points;
  Relation base_relation;  // may be empty
  TimeFrame bar;
  std::vector<Zone> zones;

  std::size_t base_size() const noexcept { return base_points.size(); }
  TimePoint past(TimePoint s) const noexcept { return TimePoint{s.index}; }
  TimePoint present(TimePoint s) const noexcept { return TimePoint{static_cast<std::uint32_t>(s.index + base_size())}; }
  TimePoint future(TimePoint s) const noexcept {
    return TimePoint{static_cast<std::uint32_t>(s.index + 2 * base_size())};
  }
  /// Points of T inside T-bar, in the order of T.
  std::vector<TimePoint> base_span() const;
};

/// Throws Error(NameCollision) when a copy name is already a point of T.
ExtendedFrame extend_frame(const TimeFrame& f);
/// Same construction for a possibly empty relation.
ExtendedFrame extend_relation(const TimeSet& points, const Relation& rel, const std::string& name);

/// q-bar = P(q) on T1, q on T, F(q) on T2.
Proposition extend_prop_PF(const Oml& L, const Proposition& q, const TenseOperator& P, const TenseOperator& F,
                           const ExtendedFrame& ef);
/// q-bar = H(q) on T1, q on T, G(q) on T2.
Proposition extend_prop_HG(const Oml& L, const Proposition& q, const TenseOperator& H, const TenseOperator& G,
                           const ExtendedFrame& ef);

/// Values of a T-bar proposition at the points of T.
Proposition restrict_to_base(const Proposition& qbar, const ExtendedFrame& ef);

/// With R induced by P and F: R-bar|T = R, Pbar(qbar)|T = P(q) and
/// Fbar(qbar)|T = F(q) for every q.
VerifyReport check_extension_PF(const Oml& L, const TimeSet& points, const TenseOperator& P, const TenseOperator& F,
                                const Quantifier& quant = {});
/// With R induced by H and G: R-bar|T = R, Hbar(qbar)|T = H(q) and
/// Gbar(qbar)|T = G(q) for every q.
VerifyReport check_extension_HG(const Oml& L, const TimeSet& points, const TenseOperator& H, const TenseOperator& G,
                                const Quantifier& quant = {});

}  // namespace omt
