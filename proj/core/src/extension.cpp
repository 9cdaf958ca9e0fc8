#include "omt/extension.hpp"

#include "omt/error.hpp"
#include "omt/induction.hpp"
#include "omt/lattice.hpp"

namespace omt {
namespace {

Proposition assemble(const Proposition& past, const Proposition& q, const Proposition& future) {
  std::vector<Element> values;
  values.reserve(3 * q.size());
  values.insert(values.end(), past.values().begin(), past.values().end());
  values.insert(values.end(), q.values().begin(), q.values().end());
  values.insert(values.end(), future.values().begin(), future.values().end());
  return Proposition(std::move(values));
}

enum class Mode { PF, HG };

VerifyReport check_extension(const Oml& L, const TimeSet& points, const TenseOperator& A, const TenseOperator& B,
                             Mode mode, const Quantifier& quant) {
  if (A.points() != points.size() || B.points() != points.size()) {
    throw Error(ErrorKind::Incompatible, "operators do not match the time set");
  }
  const auto induced = mode == Mode::PF ? induce_R1(L, A, B, quant) : induce_R2(L, A, B, quant);
  const auto ef = extend_relation(points, induced.relation, "bar");
  const TenseKind ka = mode == Mode::PF ? TenseKind::P : TenseKind::H;
  const TenseKind kb = mode == Mode::PF ? TenseKind::F : TenseKind::G;
  const auto Abar = TenseOperator::frame_induced(ef.bar, ka, A.label() + "bar");
  const auto Bbar = TenseOperator::frame_induced(ef.bar, kb, B.label() + "bar");
  const auto extend = [&](const Oml& M, const Proposition& q) {
    return mode == Mode::PF ? extend_prop_PF(M, q, A, B, ef) : extend_prop_HG(M, q, A, B, ef);
  };

  VerifyReport report;
  report.suite = mode == Mode::PF ? "ext-pf" : "ext-hg";
  report.instance = "lattice=" + L.name() + " ops=" + A.label() + "," + B.label() + " relation=" +
                    (mode == Mode::PF ? "R1" : "R2");

  CheckResult restriction;
  restriction.name = "Rbar|T = R";
  restriction.statement = "the extended relation restricted to T is the induced relation";
  const auto span = ef.base_span();
  const auto back = ef.bar.relation().restrict(span);
  restriction.cases = 1;
  if (!(back == induced.relation)) {
    restriction.verdict = Verdict::Fail;
    restriction.detail = "restriction has " + std::to_string(back.pair_count()) + " pairs, induced relation has " +
                         std::to_string(induced.relation.pair_count());
  }
  report.checks.push_back(std::move(restriction));

  const PropositionSpace space(L, points.size());
  for (const auto& [given, extended] : {std::pair{A, Abar}, std::pair{B, Bbar}}) {
    CheckResult c;
    c.name = extended.label() + "(qbar)|T = " + given.label() + "(q)";
    c.statement = "for all q: " + c.name;
    const CasePlan plan(space.size(), 1, quant, c.name);
    const auto outcome = find_counterexample(plan, quant.threads, [&]() -> CaseChecker {
      return [&](std::span<const std::uint64_t> codes) {
        const auto q = space.at(codes[0]);
        return restrict_to_base(extended.apply(L, extend(L, q)), ef) != given.apply(L, q);
      };
    });
    c.cases = outcome.cases;
    c.exhaustive = outcome.exhaustive;
    if (outcome.counterexample) {
      const auto q = space.at(outcome.counterexample->front());
      const auto lhs = restrict_to_base(extended.apply(L, extend(L, q)), ef);
      const auto rhs = given.apply(L, q);
      std::size_t t = 0;
      while (lhs[t] == rhs[t]) ++t;
      c.verdict = Verdict::Fail;
      Witness w;
      w.fields = {{"q", format_values(L, q)},
                  {"t", points.name(TimePoint{static_cast<std::uint32_t>(t)})},
                  {"lhs", L.element_name(lhs[t])},
                  {"rhs", L.element_name(rhs[t])}};
      w.replay = [q, given, extended, extend, ef](const Oml& M) {
        const auto qbar = extend(M, q);
        const auto image = extended.apply(M, qbar);
        return std::vector<std::string>{"q = " + format_values(M, q), "qbar = " + format_values(M, qbar),
                                        extended.label() + "(qbar) = " + format_values(M, image),
                                        "restricted to T = " + format_values(M, restrict_to_base(image, ef)),
                                        given.label() + "(q) = " + format_values(M, given.apply(M, q))};
      };
      c.witness = std::move(w);
    } else if (!outcome.exhaustive) {
      c.verdict = Verdict::OneSided;
      c.detail = "no counterexample in " + std::to_string(outcome.cases) + " samples";
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace

std::vector<TimePoint> ExtendedFrame::base_span() const {
  std::vector<TimePoint> out;
  for (std::uint32_t s = 0; s < base_size(); ++s) out.push_back(present(TimePoint{s}));
  return out;
}

ExtendedFrame extend_relation(const TimeSet& points, const Relation& rel, const std::string& name) {
  const std::size_t n = points.size();
  if (rel.size() != n) throw Error(ErrorKind::Incompatible, "relation does not match the time set");
  std::vector<std::string> names;
  names.reserve(3 * n);
  for (const auto& s : points.names()) names.push_back(s + "1");
  for (const auto& s : points.names()) names.push_back(s);
  for (const auto& s : points.names()) names.push_back(s + "2");
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto* copy : {&names[i], &names[2 * n + i]}) {
      if (points.find(*copy)) throw Error(ErrorKind::NameCollision, "copy point '" + *copy + "' already exists");
    }
  }
  TimeSet bar_points(names);

  Relation bar(3 * n);
  const auto at = [](std::size_t i) { return TimePoint{static_cast<std::uint32_t>(i)}; };
  for (std::size_t s = 0; s < n; ++s) {
    bar.insert(at(s), at(n + s));
    bar.insert(at(n + s), at(2 * n + s));
  }
  for (auto [s, t] : rel.pairs()) bar.insert(at(n + s.index), at(n + t.index));

  std::vector<Zone> zones(3 * n, Zone::Base);
  std::fill(zones.begin(), zones.begin() + n, Zone::Past);
  std::fill(zones.begin() + 2 * n, zones.end(), Zone::Future);
  return ExtendedFrame{points, rel, TimeFrame(name, std::move(bar_points), std::move(bar)), std::move(zones)};
}

ExtendedFrame extend_frame(const TimeFrame& f) { return extend_relation(f.points(), f.relation(), f.name() + "bar"); }

Proposition extend_prop_PF(const Oml& L, const Proposition& q, const TenseOperator& P, const TenseOperator& F,
                           const ExtendedFrame& ef) {
  if (q.size() != ef.base_size()) throw Error(ErrorKind::Incompatible, "proposition does not match the base frame");
  return assemble(P.apply(L, q), q, F.apply(L, q));
}

Proposition extend_prop_HG(const Oml& L, const Proposition& q, const TenseOperator& H, const TenseOperator& G,
                           const ExtendedFrame& ef) {
  if (q.size() != ef.base_size()) throw Error(ErrorKind::Incompatible, "proposition does not match the base frame");
  return assemble(H.apply(L, q), q, G.apply(L, q));
}

Proposition restrict_to_base(const Proposition& qbar, const ExtendedFrame& ef) {
  const std::size_t n = ef.base_size();
  if (qbar.size() != 3 * n) throw Error(ErrorKind::Incompatible, "proposition does not match the extended frame");
  return Proposition(std::vector<Element>(qbar.values().begin() + n, qbar.values().begin() + 2 * n));
}

VerifyReport check_extension_PF(const Oml& L, const TimeSet& points, const TenseOperator& P, const TenseOperator& F,
                                const Quantifier& quant) {
  return check_extension(L, points, P, F, Mode::PF, quant);
}

VerifyReport check_extension_HG(const Oml& L, const TimeSet& points, const TenseOperator& H, const TenseOperator& G,
                                const Quantifier& quant) {
  return check_extension(L, points, H, G, Mode::HG, quant);
}

}  // namespace omt
