#include <gtest/gtest.h>

#include "helpers.hpp"
#include "omt/error.hpp"
#include "omt/fixtures.hpp"
#include "omt/sasaki.hpp"
#include "omt/tense.hpp"

using namespace omt;
using testing_helpers::named;

namespace {

const std::vector<std::string> kOrthomodular{"chain2", "boolean2", "boolean3", "mo2", "fig1"};

}  // namespace

TEST(Sasaki, ElementExamples) {
  const auto L = fixtures::lattice("fig1");
  const auto e = [&](const char* n) { return L.element(n); };
  EXPECT_EQ(sasaki_and(L, e("a"), e("1")), e("a"));
  EXPECT_EQ(sasaki_and(L, e("d"), e("a")), e("a"));
  EXPECT_EQ(sasaki_imp(L, e("a"), e("0")), e("a'"));
  EXPECT_EQ(sasaki_imp(L, e("d"), e("a")), e("d'"));
  EXPECT_EQ(sasaki_projection(L, e("a"), e("c'")), e("a"));
  for (auto y : L.elements()) {
    EXPECT_EQ(sasaki_and(L, e("0"), y), e("0"));
    EXPECT_EQ(sasaki_imp(L, e("0"), y), e("1"));
    EXPECT_EQ(sasaki_projection(L, e("1"), y), y);
  }
}

TEST(Sasaki, PropositionExamples) {
  const auto L = fixtures::lattice("fig1");
  const auto p = fixtures::example_p(L), q = fixtures::example_q(L);
  EXPECT_EQ(prop_sasaki_and(L, p, q)[0], L.element("a"));
  EXPECT_EQ(prop_sasaki_imp(L, p, q)[2], L.element("c"));
  const auto one = Proposition::constant(5, L.top()), zero = Proposition::constant(5, L.bottom());
  EXPECT_EQ(prop_sasaki_and(L, p, one), p);
  EXPECT_EQ(prop_sasaki_and(L, zero, q), zero);
  EXPECT_EQ(prop_sasaki_imp(L, p, zero), pointwise_complement(L, p));
  EXPECT_EQ(prop_sasaki_imp(L, one, q), q);
  EXPECT_THROW(prop_sasaki_and(L, p, Proposition::constant(3, L.top())), Error);
}

TEST(Sasaki, RequiresOrtho) {
  const auto L = Oml::build({"chain3", {"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}, {}});
  try {
    sasaki_and(L, L.bottom(), L.top());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoOrtho);
  }
  EXPECT_THROW(sasaki_imp(L, L.bottom(), L.top()), Error);
}

TEST(SasakiProperty, MatchesOracleDefinitions) {
  for (const auto& name : fixtures::lattice_names()) {
    const auto spec = fixtures::lattice_spec(name);
    const auto L = Oml::build(spec);
    const oracle::Lattice O(spec);
    for (auto x : L.elements()) {
      for (auto y : L.elements()) {
        EXPECT_EQ(static_cast<int>(sasaki_and(L, x, y).index), O.sand(x.index, y.index));
        EXPECT_EQ(static_cast<int>(sasaki_imp(L, x, y).index), O.simp(x.index, y.index));
      }
    }
  }
}

TEST(SasakiProperty, LawsOnOrthomodularFixtures) {
  for (const auto& name : kOrthomodular) {
    SCOPED_TRACE(name);
    const auto L = fixtures::lattice(name);
    for (auto a : L.elements()) {
      EXPECT_EQ(sasaki_and(L, a, L.top()), a);
      EXPECT_EQ(sasaki_and(L, L.top(), a), a);
      EXPECT_EQ(L.complement(a), sasaki_imp(L, a, L.bottom()));
      for (auto b : L.elements()) {
        EXPECT_EQ(sasaki_and(L, sasaki_imp(L, a, b), a), L.meet(a, b));
        EXPECT_TRUE(L.leq(a, sasaki_imp(L, b, sasaki_and(L, a, b))));
        EXPECT_TRUE(L.leq(sasaki_projection(L, b, a), b));
        EXPECT_EQ(sasaki_imp(L, a, b), L.complement(sasaki_projection(L, a, L.complement(b))));
        for (auto c : L.elements()) {
          EXPECT_EQ(L.leq(sasaki_and(L, a, b), c), L.leq(a, sasaki_imp(L, b, c)));
        }
      }
    }
  }
}

TEST(SasakiProperty, BooleanDegeneratesToClassicalConnectives) {
  const auto L = fixtures::lattice("boolean3");
  for (auto x : L.elements()) {
    for (auto y : L.elements()) {
      EXPECT_EQ(sasaki_and(L, x, y), L.meet(x, y));
      EXPECT_EQ(sasaki_imp(L, x, y), L.join(L.complement(x), y));
    }
  }
}

TEST(SasakiProperty, AdjointnessFailsOnHexagon) {
  const auto L = fixtures::lattice("o6");
  bool violated = false;
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      for (auto c : L.elements()) {
        violated = violated || L.leq(sasaki_and(L, a, b), c) != L.leq(a, sasaki_imp(L, b, c));
      }
    }
  }
  EXPECT_TRUE(violated);
}
