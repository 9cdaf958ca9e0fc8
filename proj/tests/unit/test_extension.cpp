#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "omt/error.hpp"
#include "omt/extension.hpp"
#include "omt/fixtures.hpp"
#include "omt/induction.hpp"

using namespace omt;
using testing_helpers::frame_of;
using testing_helpers::named;
using testing_helpers::pairs_of;
using testing_helpers::prop_of;
using testing_helpers::values_of;

TEST(Extension, LayoutAndNames) {
  const auto f = frame_of(3, {{0, 1}, {1, 2}}, "chain");
  const auto ef = extend_frame(f);
  EXPECT_EQ(ef.bar.name(), "chainbar");
  EXPECT_EQ(ef.bar.points().names(), (std::vector<std::string>{"11", "21", "31", "1", "2", "3", "12", "22", "32"}));
  EXPECT_EQ(ef.zones, (std::vector<Zone>{Zone::Past, Zone::Past, Zone::Past, Zone::Base, Zone::Base, Zone::Base,
                                         Zone::Future, Zone::Future, Zone::Future}));
  EXPECT_EQ(ef.base_span(), (std::vector<TimePoint>{TimePoint{3}, TimePoint{4}, TimePoint{5}}));
  EXPECT_EQ(pairs_of(ef.bar.relation()),
            (oracle::Pairs{{3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}}));
  EXPECT_EQ(ef.past(TimePoint{1}), TimePoint{1});
  EXPECT_EQ(ef.present(TimePoint{1}), TimePoint{4});
  EXPECT_EQ(ef.future(TimePoint{1}), TimePoint{7});
}

TEST(Extension, EmptyBaseRelationIsAllowed) {
  const auto ef = extend_relation(TimeSet::numbered(2), Relation(2), "empty");
  EXPECT_EQ(ef.bar.relation().pair_count(), 4u);
  EXPECT_TRUE(ef.base_relation.empty());
}

TEST(Extension, Errors) {
  const TimeFrame f("clash", TimeSet({"a", "a1"}), Relation::full(2));
  try {
    extend_frame(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NameCollision);
  }
  EXPECT_THROW(extend_relation(TimeSet::numbered(2), Relation(3), "bad"), Error);

  const auto L = fixtures::lattice("chain2");
  const auto ef = extend_frame(frame_of(2, {{0, 1}}));
  const auto P = TenseOperator::frame_induced(ef.base_relation, TenseKind::P);
  const auto F = TenseOperator::frame_induced(ef.base_relation, TenseKind::F);
  EXPECT_THROW(extend_prop_PF(L, Proposition::constant(3, L.top()), P, F, ef), Error);
  EXPECT_THROW(restrict_to_base(Proposition::constant(5, L.top()), ef), Error);
}

TEST(Extension, ExtendedPropositionLayout) {
  const auto L = fixtures::lattice("fig1");
  const auto f = frame_of(3, {{0, 1}, {1, 2}, {0, 0}});
  const auto ef = extend_frame(f);
  const auto q = named(L, {"a", "b", "c"});
  const auto P = TenseOperator::frame_induced(f, TenseKind::P), F = TenseOperator::frame_induced(f, TenseKind::F);
  const auto H = TenseOperator::frame_induced(f, TenseKind::H), G = TenseOperator::frame_induced(f, TenseKind::G);
  EXPECT_EQ(extend_prop_PF(L, q, P, F, ef), named(L, {"a", "a", "b", "a", "b", "c", "c'", "c", "0"}));
  EXPECT_EQ(extend_prop_HG(L, q, H, G, ef), named(L, {"a", "a", "b", "a", "b", "c", "0", "c", "1"}));
  EXPECT_EQ(restrict_to_base(extend_prop_PF(L, q, P, F, ef), ef), q);
}

TEST(Extension, RuleQuadruplePasses) {
  const auto L = fixtures::lattice("fig1");
  const auto ops = fixtures::rule_quadruple(L, 5);
  const auto pf = check_extension_PF(L, TimeSet::numbered(5), ops.P, ops.F);
  const auto hg = check_extension_HG(L, TimeSet::numbered(5), ops.H, ops.G);
  EXPECT_EQ(pf.suite, "ext-pf");
  EXPECT_EQ(hg.suite, "ext-hg");
  EXPECT_EQ(pf.verdict(), Verdict::Pass) << render_text(pf);
  EXPECT_EQ(hg.verdict(), Verdict::Pass) << render_text(hg);
  EXPECT_TRUE(pf.find("Rbar|T = R"));
  ASSERT_EQ(pf.checks.size(), 3u);
  for (const auto& c : pf.checks) EXPECT_TRUE(c.exhaustive);
}

TEST(Extension, SampledChecksAreOneSided) {
  const auto L = fixtures::lattice("fig1");
  const auto ops = fixtures::rule_quadruple(L, 5);
  Quantifier q;
  q.budget = 5000;
  const auto pf = check_extension_PF(L, TimeSet::numbered(5), ops.P, ops.F, q);
  EXPECT_EQ(pf.verdict(), Verdict::OneSided);
}

TEST(ExtensionProperty, ExtendedOperatorsRestrictToTheOriginals) {
  std::mt19937 rng(9);
  for (const char* name : {"mo2", "fig1", "o6"}) {
    const auto spec = fixtures::lattice_spec(name);
    const auto L = Oml::build(spec);
    const oracle::Lattice O(spec);
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 1 + trial % 3;
      const auto pairs = oracle::random_relation(rng, n, 0.4);
      const auto f = frame_of(n, pairs);
      const auto ef = extend_frame(f);
      EXPECT_EQ(pairs_of(ef.bar.relation().restrict(ef.base_span())), pairs);

      const auto ops = OperatorQuadruple::induced_by(f.relation());
      const auto bar = OperatorQuadruple::induced_by(ef.bar.relation());
      std::uniform_int_distribution<int> el(0, O.size() - 1);
      for (int k = 0; k < 10; ++k) {
        oracle::Values v(n);
        for (auto& x : v) x = el(rng);
        const auto q = prop_of(v);
        const auto pf = extend_prop_PF(L, q, ops.P, ops.F, ef);
        const auto hg = extend_prop_HG(L, q, ops.H, ops.G, ef);
        EXPECT_EQ(values_of(restrict_to_base(bar.P.apply(L, pf), ef)), oracle::tense(O, pairs, n, oracle::Op::P, v));
        EXPECT_EQ(values_of(restrict_to_base(bar.F.apply(L, pf), ef)), oracle::tense(O, pairs, n, oracle::Op::F, v));
        EXPECT_EQ(values_of(restrict_to_base(bar.H.apply(L, hg), ef)), oracle::tense(O, pairs, n, oracle::Op::H, v));
        EXPECT_EQ(values_of(restrict_to_base(bar.G.apply(L, hg), ef)), oracle::tense(O, pairs, n, oracle::Op::G, v));
      }
      EXPECT_EQ(check_extension_PF(L, f.points(), ops.P, ops.F).verdict(), Verdict::Pass);
      EXPECT_EQ(check_extension_HG(L, f.points(), ops.H, ops.G).verdict(), Verdict::Pass);
    }
  }
}
