#include "omt/induction.hpp"

#include "omt/error.hpp"
#include "omt/lattice.hpp"
#include "omt/law.hpp"

namespace omt {
namespace {

enum class Family { R1, R2 };

Quantifier exact(Quantifier q) {
  q.over_budget = OverBudget::Throw;
  return q;
}

InducedRelationReport induce(const Oml& L, const TenseOperator& A, const TenseOperator& B, Family family,
                             const Quantifier& quant) {
  if (A.points() != B.points()) throw Error(ErrorKind::Incompatible, "operators over different time sets");
  const std::size_t n = A.points();
  const PropositionSpace space(L, n);
  const CasePlan plan(space.size(), 1, quant, "induced relation");
  const std::uint64_t cases = plan.count();

  std::vector<Element> qv(cases * n), av(cases * n), bv(cases * n);
  const std::uint64_t block = 1024;
  parallel_for((cases + block - 1) / block, quant.threads, [&](std::uint64_t b) {
    std::uint64_t code = 0;
    for (std::uint64_t i = b * block; i < std::min(cases, (b + 1) * block); ++i) {
      plan.codes(i, std::span<std::uint64_t>(&code, 1));
      const auto q = space.at(code);
      const auto a = A.apply(L, q);
      const auto c = B.apply(L, q);
      std::copy(q.values().begin(), q.values().end(), qv.begin() + i * n);
      std::copy(a.values().begin(), a.values().end(), av.begin() + i * n);
      std::copy(c.values().begin(), c.values().end(), bv.begin() + i * n);
    }
  });

  const std::string first = family == Family::R1 ? "q(s) <= " + A.label() + "(q)(t)" : A.label() + "(q)(t) <= q(s)";
  const std::string second = family == Family::R1 ? "q(t) <= " + B.label() + "(q)(s)" : B.label() + "(q)(s) <= q(t)";

  std::vector<std::optional<ExcludedPair>> verdicts(n * n);
  parallel_for(n * n, quant.threads, [&](std::uint64_t idx) {
    const std::size_t s = idx / n, t = idx % n;
    for (std::uint64_t i = 0; i < cases; ++i) {
      const Element* q = qv.data() + i * n;
      const Element* a = av.data() + i * n;
      const Element* b = bv.data() + i * n;
      Element l1, r1, l2, r2;
      if (family == Family::R1) {
        l1 = q[s], r1 = a[t], l2 = q[t], r2 = b[s];
      } else {
        l1 = a[t], r1 = q[s], l2 = b[s], r2 = q[t];
      }
      const bool ok1 = L.leq(l1, r1);
      if (ok1 && L.leq(l2, r2)) continue;
      ExcludedPair e;
      e.s = TimePoint{static_cast<std::uint32_t>(s)};
      e.t = TimePoint{static_cast<std::uint32_t>(t)};
      e.q = Proposition(std::vector<Element>(q, q + n));
      e.case_index = i;
      e.inequality = ok1 ? second : first;
      e.lhs = ok1 ? l2 : l1;
      e.rhs = ok1 ? r2 : r1;
      verdicts[idx] = std::move(e);
      return;
    }
  });

  InducedRelationReport report;
  report.relation = Relation(n);
  report.exhaustive = plan.exhaustive();
  report.cases = cases;
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    if (verdicts[idx]) {
      report.excluded.push_back(std::move(*verdicts[idx]));
    } else {
      report.relation.insert(TimePoint{static_cast<std::uint32_t>(idx / n)},
                             TimePoint{static_cast<std::uint32_t>(idx % n)});
    }
  }
  return report;
}

InducedRelationReport intersect(const InducedRelationReport& r1, const InducedRelationReport& r2) {
  InducedRelationReport out;
  out.relation = r1.relation.intersect(r2.relation);
  out.exhaustive = r1.exhaustive && r2.exhaustive;
  out.cases = r1.cases;
  auto i = r1.excluded.begin(), j = r2.excluded.begin();
  const auto key = [](const ExcludedPair& e) { return std::make_pair(e.s, e.t); };
  while (i != r1.excluded.end() || j != r2.excluded.end()) {
    if (j == r2.excluded.end() || (i != r1.excluded.end() && key(*i) < key(*j))) {
      out.excluded.push_back(*i++);
    } else if (i == r1.excluded.end() || key(*j) < key(*i)) {
      out.excluded.push_back(*j++);
    } else {
      out.excluded.push_back(j->case_index < i->case_index ? *j : *i);
      ++i, ++j;
    }
  }
  return out;
}

Witness pair_witness(const ExcludedPair& e, const TimeSet& points, const Oml& L) {
  Witness w;
  w.fields = {{"s", points.name(e.s)},
              {"t", points.name(e.t)},
              {"q", format_values(L, e.q)},
              {"violated", e.inequality},
              {"lhs", L.element_name(e.lhs)},
              {"rhs", L.element_name(e.rhs)}};
  w.replay = [e, points](const Oml& M) {
    std::vector<std::string> lines;
    lines.push_back("pair (s,t) = (" + points.name(e.s) + "," + points.name(e.t) + ")");
    lines.push_back("q = " + format_values(M, e.q));
    lines.push_back(e.inequality + ": " + M.element_name(e.lhs) + " <= " + M.element_name(e.rhs) + " is " +
                    (M.leq(e.lhs, e.rhs) ? "true" : "false"));
    return lines;
  };
  return w;
}

Law operator_law(std::string name, const TenseOperator& A, const TenseOperator& B, Cmp cmp) {
  const auto q = Term::var(0, "q");
  return Law{std::move(name), {"q"}, std::nullopt, Term::apply(A, q), cmp, Term::apply(B, q)};
}

// `lhs <= rhs` plus a note on whether equality holds as well.
CheckResult inequality_with_strictness(LawContext& ctx, const TenseOperator& lhs, const TenseOperator& rhs) {
  auto result = check_law(ctx, operator_law(lhs.label() + " <= " + rhs.label(), lhs, rhs, Cmp::Leq));
  if (result.verdict == Verdict::Fail) return result;
  const auto eq = check_law(ctx, operator_law(lhs.label() + " = " + rhs.label(), lhs, rhs, Cmp::Eq));
  if (eq.verdict == Verdict::Fail) {
    result.detail = "strict: " + lhs.label() + " != " + rhs.label() + " at " + eq.witness->summary();
  } else if (eq.verdict == Verdict::Pass) {
    result.detail = "equal";
  }
  return result;
}

std::string pair_name(const TimeSet& points, TimePoint s, TimePoint t) {
  return "(" + points.name(s) + "," + points.name(t) + ")";
}

CheckResult relation_equality(const std::string& name, const InducedRelationReport& induced, const Relation& expected,
                              const TimeSet& points, const Oml& L) {
  CheckResult c;
  c.name = name;
  c.statement = name.substr(0, 2) + " induced by the operators of R equals R";
  c.cases = induced.cases;
  c.exhaustive = induced.exhaustive;
  for (const auto& e : induced.excluded) {
    if (expected.contains(e.s, e.t)) {
      c.verdict = Verdict::Fail;
      c.detail = "pair " + pair_name(points, e.s, e.t) + " of R is missing from the induced relation";
      c.witness = pair_witness(e, points, L);
      return c;
    }
  }
  for (auto [s, t] : induced.relation.pairs()) {
    if (!expected.contains(s, t)) {
      c.verdict = Verdict::Fail;
      c.detail = "pair " + pair_name(points, s, t) + " is induced but not in R";
      Witness w;
      w.fields = {{"s", points.name(s)}, {"t", points.name(t)}};
      const auto cases = induced.cases;
      w.replay = [s, t, points, cases](const Oml&) {
        return std::vector<std::string>{"pair " + pair_name(points, s, t) + " satisfied both inequalities for all " +
                                        std::to_string(cases) + " propositions"};
      };
      c.witness = std::move(w);
      return c;
    }
  }
  c.verdict = Verdict::Pass;
  return c;
}

}  // namespace

TimeFrame InducedRelationReport::frame(const TimeSet& points, std::string name) const {
  if (relation.empty()) throw Error(ErrorKind::EmptyRelation, "induced relation is empty");
  return TimeFrame(std::move(name), points, relation);
}

InducedRelationReport induce_R1(const Oml& L, const TenseOperator& P, const TenseOperator& F, const Quantifier& quant) {
  return induce(L, P, F, Family::R1, quant);
}

InducedRelationReport induce_R2(const Oml& L, const TenseOperator& H, const TenseOperator& G, const Quantifier& quant) {
  return induce(L, H, G, Family::R2, quant);
}

InducedRelationReport induce_R3(const Oml& L, const OperatorQuadruple& ops, const Quantifier& quant) {
  return intersect(induce_R1(L, ops.P, ops.F, quant), induce_R2(L, ops.H, ops.G, quant));
}

Proposition indicator_proposition(const Oml& L, std::size_t points, TimePoint u) {
  if (u.index >= points) throw Error(ErrorKind::UnknownTimePoint, "indicator point out of range");
  auto q = Proposition::constant(points, L.bottom());
  q[u.index] = L.top();
  return q;
}

Proposition indicator_proposition(const Oml& L, const TimeSet& points, std::string_view u) {
  return indicator_proposition(L, points.size(), points.point(u));
}

VerifyReport roundtrip_frame(const Oml& L, const TimeFrame& f, const Quantifier& quant) {
  const auto q = exact(quant);
  const auto ops = OperatorQuadruple::induced_by(f.relation());
  const auto r1 = induce_R1(L, ops.P, ops.F, q);
  const auto r2 = induce_R2(L, ops.H, ops.G, q);
  const auto r3 = intersect(r1, r2);

  VerifyReport report;
  report.suite = "thm4-roundtrip";
  report.instance = "lattice=" + L.name() + " frame=" + f.name();

  CheckResult inclusion;
  inclusion.name = "R <= R3";
  inclusion.statement = "every pair of R survives in R3";
  inclusion.cases = r3.cases;
  inclusion.exhaustive = r3.exhaustive;
  for (const auto& e : r3.excluded) {
    if (f.related(e.s, e.t)) {
      inclusion.verdict = Verdict::Fail;
      inclusion.witness = pair_witness(e, f.points(), L);
      break;
    }
  }
  report.checks.push_back(std::move(inclusion));
  report.checks.push_back(relation_equality("R1 = R", r1, f.relation(), f.points(), L));
  report.checks.push_back(relation_equality("R2 = R", r2, f.relation(), f.points(), L));
  report.checks.push_back(relation_equality("R3 = R", r3, f.relation(), f.points(), L));

  const auto star = OperatorQuadruple::induced_by(r3.relation, "*");
  LawContext ctx(L, f.points(), q);
  for (auto k : kAllTenses) {
    report.checks.push_back(check_law(ctx, operator_law(star[k].label() + " = " + ops[k].label(), star[k], ops[k], Cmp::Eq)));
  }
  return report;
}

InducibilityVerdict classify_inducibility(const Oml& L, const OperatorQuadruple& ops, const Quantifier& quant) {
  const auto q = exact(quant);
  InducibilityVerdict verdict;
  verdict.relation = induce_R3(L, ops, q).relation;
  const auto star = OperatorQuadruple::induced_by(verdict.relation, "*");
  for (auto k : kAllTenses) {
    const auto cmp = op_eq(L, star[k], ops[k], q);
    if (!cmp.holds) {
      const auto& ce = *cmp.counterexample;
      verdict.witness = InducibilityWitness{k, ce.q, ce.t, ce.rhs, ce.lhs};
      return verdict;
    }
  }
  verdict.frame_induced = true;
  return verdict;
}

VerifyReport check_star_inequalities(const Oml& L, const OperatorQuadruple& ops, const Quantifier& quant) {
  const auto q = exact(quant);
  const auto r3 = induce_R3(L, ops, q);
  const auto star = OperatorQuadruple::induced_by(r3.relation, "*");
  VerifyReport report;
  report.suite = "cor1";
  report.instance = "lattice=" + L.name() + " ops=" + ops.P.label() + "," + ops.F.label() + "," + ops.H.label() + "," +
                    ops.G.label() + " relation=R3";
  LawContext ctx(L, TimeSet::numbered(ops.points()), q);
  report.checks.push_back(inequality_with_strictness(ctx, star.P, ops.P));
  report.checks.push_back(inequality_with_strictness(ctx, star.F, ops.F));
  report.checks.push_back(inequality_with_strictness(ctx, ops.H, star.H));
  report.checks.push_back(inequality_with_strictness(ctx, ops.G, star.G));
  return report;
}

VerifyReport check_star_inequalities_R1(const Oml& L, const TenseOperator& P, const TenseOperator& F, const Quantifier& quant) {
  const auto q = exact(quant);
  const auto r1 = induce_R1(L, P, F, q);
  const auto Pstar = TenseOperator::frame_induced(r1.relation, TenseKind::P, P.label() + "*");
  const auto Fstar = TenseOperator::frame_induced(r1.relation, TenseKind::F, F.label() + "*");
  VerifyReport report;
  report.suite = "star-r1";
  report.instance = "lattice=" + L.name() + " relation=R1";
  LawContext ctx(L, TimeSet::numbered(P.points()), q);
  report.checks.push_back(inequality_with_strictness(ctx, Pstar, P));
  report.checks.push_back(inequality_with_strictness(ctx, Fstar, F));
  return report;
}

VerifyReport check_star_inequalities_R2(const Oml& L, const TenseOperator& H, const TenseOperator& G, const Quantifier& quant) {
  const auto q = exact(quant);
  const auto r2 = induce_R2(L, H, G, q);
  const auto Hstar = TenseOperator::frame_induced(r2.relation, TenseKind::H, H.label() + "*");
  const auto Gstar = TenseOperator::frame_induced(r2.relation, TenseKind::G, G.label() + "*");
  VerifyReport report;
  report.suite = "star-r2";
  report.instance = "lattice=" + L.name() + " relation=R2";
  LawContext ctx(L, TimeSet::numbered(H.points()), q);
  report.checks.push_back(inequality_with_strictness(ctx, H, Hstar));
  report.checks.push_back(inequality_with_strictness(ctx, G, Gstar));
  return report;
}

}  // namespace omt
