#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "omt/error.hpp"
#include "omt/fixtures.hpp"
#include "omt/induction.hpp"

using namespace omt;
using testing_helpers::pairs_of;
using testing_helpers::prop_of;
using testing_helpers::relation_of;
using testing_helpers::values_of;

namespace {

oracle::Pairs blocks(std::initializer_list<std::vector<int>> groups) {
  oracle::Pairs out;
  for (const auto& g : groups) {
    for (int s : g) {
      for (int t : g) out.insert({s, t});
    }
  }
  return out;
}

// q(t) at `keep`, `other` elsewhere.
oracle::OpFn rule(int keep, int other) {
  return [=](const oracle::Values& q) {
    oracle::Values out(q.size(), other);
    out[keep] = q[keep];
    return out;
  };
}

oracle::OpFn frame_op(const oracle::Lattice& O, const oracle::Pairs& pairs, int n, oracle::Op op) {
  return [&O, pairs, n, op](const oracle::Values& q) { return oracle::tense(O, pairs, n, op, q); };
}

}  // namespace

TEST(Induction, RuleQuadrupleRelations) {
  const auto spec = fixtures::lattice_spec("fig1");
  const auto L = Oml::build(spec);
  const oracle::Lattice O(spec);
  const auto ops = fixtures::rule_quadruple(L, 5);

  const auto r3 = induce_R3(L, ops);
  EXPECT_TRUE(r3.exhaustive);
  EXPECT_EQ(pairs_of(r3.relation), blocks({{0}, {1}, {2, 3, 4}}));

  const int top = O.top(), bottom = O.bottom();
  const auto r1 = induce_R1(L, ops.P, ops.F);
  const auto r2 = induce_R2(L, ops.H, ops.G);
  EXPECT_EQ(pairs_of(r1.relation), oracle::induced(O, 5, rule(1, top), rule(0, top), true));
  EXPECT_EQ(pairs_of(r2.relation), oracle::induced(O, 5, rule(0, bottom), rule(1, bottom), false));
  EXPECT_EQ(r3.relation, r1.relation.intersect(r2.relation));
}

TEST(Induction, ExcludedPairsCarryRefutations) {
  const auto spec = fixtures::lattice_spec("fig1");
  const auto L = Oml::build(spec);
  const oracle::Lattice O(spec);
  const auto ops = fixtures::rule_quadruple(L, 5);
  const auto r1 = induce_R1(L, ops.P, ops.F);
  ASSERT_EQ(r1.excluded.size(), 25 - r1.relation.pair_count());
  for (std::size_t i = 0; i < r1.excluded.size(); ++i) {
    const auto& e = r1.excluded[i];
    EXPECT_FALSE(r1.relation.contains(e.s, e.t));
    EXPECT_FALSE(L.leq(e.lhs, e.rhs));
    if (i > 0) {
      EXPECT_LT(std::make_pair(r1.excluded[i - 1].s, r1.excluded[i - 1].t), std::make_pair(e.s, e.t));
    }
    const auto q = values_of(e.q), p = rule(1, O.top())(q), f = rule(0, O.top())(q);
    if (e.inequality == "q(s) <= P(q)(t)") {
      EXPECT_FALSE(O.leq[q[e.s.index]][p[e.t.index]]);
    } else {
      EXPECT_EQ(e.inequality, "q(t) <= F(q)(s)");
      EXPECT_FALSE(O.leq[q[e.t.index]][f[e.s.index]]);
    }
  }
}

TEST(Induction, ClassifiesRuleQuadrupleAsNotFrameInduced) {
  const auto L = fixtures::lattice("fig1");
  const auto v = classify_inducibility(L, fixtures::rule_quadruple(L, 5));
  EXPECT_FALSE(v.frame_induced);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->op, TenseKind::P);
  EXPECT_EQ(v.witness->q, Proposition::constant(5, L.bottom()));
  EXPECT_EQ(v.witness->s, TimePoint{0});
  EXPECT_EQ(v.witness->given, L.top());
  EXPECT_EQ(v.witness->induced, L.bottom());
}

TEST(Induction, ClassifiesFrameOperators) {
  const auto L = fixtures::lattice("mo2");
  const auto rel = relation_of(3, {{0, 1}, {1, 1}, {2, 0}});
  const auto v = classify_inducibility(L, OperatorQuadruple::induced_by(rel));
  EXPECT_TRUE(v.frame_induced);
  EXPECT_FALSE(v.witness);
  EXPECT_EQ(v.relation, rel);
}

TEST(Induction, StarInequalitiesOnRuleQuadruple) {
  const auto L = fixtures::lattice("fig1");
  const auto ops = fixtures::rule_quadruple(L, 5);
  const auto report = check_star_inequalities(L, ops);
  EXPECT_EQ(report.verdict(), Verdict::Pass);
  ASSERT_EQ(report.checks.size(), 4u);
  EXPECT_EQ(report.checks[0].detail.rfind("strict", 0), 0u) << report.checks[0].detail;
  EXPECT_EQ(check_star_inequalities_R1(L, ops.P, ops.F).verdict(), Verdict::Pass);
  EXPECT_EQ(check_star_inequalities_R2(L, ops.H, ops.G).verdict(), Verdict::Pass);
}

TEST(Induction, StarInequalitiesAreEqualitiesOnFrames) {
  const auto L = fixtures::lattice("boolean2");
  const auto report = check_star_inequalities(L, OperatorQuadruple::induced_by(Relation::identity(3)));
  EXPECT_EQ(report.verdict(), Verdict::Pass);
  for (const auto& c : report.checks) EXPECT_EQ(c.detail, "equal") << c.name;
}

TEST(Induction, ConstantOperatorsInduceFullRelations) {
  const auto L = fixtures::lattice("fig1");
  const auto P = TenseOperator::identity_else_constant(3, {}, L.top(), Shape::JoinLike, "P");
  const auto H = TenseOperator::identity_else_constant(3, {}, L.bottom(), Shape::MeetLike, "H");
  EXPECT_EQ(induce_R1(L, P, P).relation, Relation::full(3));
  EXPECT_EQ(induce_R2(L, H, H).relation, Relation::full(3));
}

TEST(Induction, BottomOperatorsInduceNothing) {
  const auto L = fixtures::lattice("chain2");
  const auto zero = TenseOperator::identity_else_constant(2, {}, L.bottom(), Shape::JoinLike, "P");
  const auto r = induce_R1(L, zero, zero);
  EXPECT_TRUE(r.relation.empty());
  try {
    r.frame(TimeSet::numbered(2), "none");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyRelation);
  }
}

TEST(Induction, IndicatorProposition) {
  const auto L = fixtures::lattice("chain2");
  const auto q = indicator_proposition(L, 3, TimePoint{1});
  EXPECT_EQ(q, Proposition({L.bottom(), L.top(), L.bottom()}));
  EXPECT_EQ(indicator_proposition(L, TimeSet::numbered(3), "2"), q);
  EXPECT_THROW(indicator_proposition(L, TimeSet::numbered(3), "4"), Error);
  EXPECT_THROW(indicator_proposition(L, 3, TimePoint{3}), Error);
}

TEST(Induction, SampledRelationIsAnUpperBound) {
  const auto L = fixtures::lattice("fig1");
  const auto ops = fixtures::rule_quadruple(L, 5);
  Quantifier q;
  q.budget = 2000;
  const auto sampled = induce_R3(L, ops, q);
  EXPECT_FALSE(sampled.exhaustive);
  EXPECT_EQ(sampled.cases, 2000u);
  EXPECT_TRUE(induce_R3(L, ops).relation.subset_of(sampled.relation));
}

TEST(Induction, RoundtripThrowsOverBudget) {
  const auto L = fixtures::lattice("fig1");
  Quantifier q;
  q.budget = 10;
  const auto f = testing_helpers::frame_of(3, {{0, 1}});
  EXPECT_THROW(roundtrip_frame(L, f, q), Error);
}

TEST(InductionProperty, FrameOperatorsInduceTheirFrame) {
  std::mt19937 rng(5);
  for (const auto& name : fixtures::lattice_names()) {
    const auto spec = fixtures::lattice_spec(name);
    const auto L = Oml::build(spec);
    const oracle::Lattice O(spec);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 1 + trial % 3;
      const auto pairs = oracle::random_relation(rng, n, 0.45);
      const auto f = testing_helpers::frame_of(n, pairs);
      SCOPED_TRACE(name + " n=" + std::to_string(n));
      const auto ops = OperatorQuadruple::induced_by(f.relation());
      const auto r1 = induce_R1(L, ops.P, ops.F), r2 = induce_R2(L, ops.H, ops.G);
      EXPECT_EQ(pairs_of(r1.relation), pairs);
      EXPECT_EQ(pairs_of(r2.relation), pairs);
      EXPECT_EQ(pairs_of(r1.relation),
                oracle::induced(O, n, frame_op(O, pairs, n, oracle::Op::P), frame_op(O, pairs, n, oracle::Op::F), true));
      const auto report = roundtrip_frame(L, f);
      EXPECT_EQ(report.verdict(), Verdict::Pass) << render_text(report);
    }
  }
}

TEST(InductionProperty, RelationsAreMonotoneInTheOperators) {
  std::mt19937 rng(6);
  const auto spec = fixtures::lattice_spec("mo2");
  const auto L = Oml::build(spec);
  const oracle::Lattice O(spec);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    const auto small = oracle::random_relation(rng, n, 0.3);
    auto big = small;
    for (const auto& p : oracle::random_relation(rng, n, 0.3)) big.insert(p);
    const auto a = OperatorQuadruple::induced_by(relation_of(n, small));
    const auto b = OperatorQuadruple::induced_by(relation_of(n, big));
    // P_small <= P_big and F_small <= F_big, hence R1 grows; H and G shrink, hence R2 grows.
    EXPECT_TRUE(induce_R1(L, a.P, a.F).relation.subset_of(induce_R1(L, b.P, b.F).relation));
    EXPECT_TRUE(induce_R2(L, a.H, a.G).relation.subset_of(induce_R2(L, b.H, b.G).relation));
    const auto top = TenseOperator::identity_else_constant(n, {}, L.top(), Shape::JoinLike, "P");
    EXPECT_TRUE(induce_R1(L, a.P, a.F).relation.subset_of(induce_R1(L, top, a.F).relation));
    const auto mixed_P = TenseOperator::identity_else_constant(n, {TimePoint{0}}, L.top(), Shape::JoinLike, "P");
    EXPECT_EQ(pairs_of(induce_R1(L, mixed_P, a.F).relation),
              oracle::induced(O, n, rule(0, O.top()), frame_op(O, small, n, oracle::Op::F), true));
  }
}
