#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "omt/error.hpp"
#include "omt/fixtures.hpp"
#include "omt/law.hpp"

using namespace omt;
using testing_helpers::prop_of;
using testing_helpers::values_of;

namespace {

Law orthomodular_law() {
  const auto x = Term::var(0, "x"), y = Term::var(1, "y");
  return Law{"oml", {"x", "y"}, std::make_pair(x, y), y, Cmp::Eq, Term::join(x, Term::meet(y, Term::comp(x)))};
}

// A random term over two variables, mirrored by an oracle evaluator.
struct RandomTerm {
  Term term;
  std::function<oracle::Values(const oracle::Values&, const oracle::Values&)> eval;
};

RandomTerm random_term(std::mt19937& rng, const oracle::Lattice& O, const Relation& rel, const oracle::Pairs& pairs,
                       int n, int depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 1 : 8);
  const int choice = pick(rng);
  if (choice == 0) return {Term::var(0, "x"), [](const auto& x, const auto&) { return x; }};
  if (choice == 1) return {Term::var(1, "y"), [](const auto&, const auto& y) { return y; }};
  if (choice <= 4) {
    const auto kind = static_cast<TenseKind>(choice - 1);
    const auto op = static_cast<oracle::Op>(choice - 1);
    auto inner = random_term(rng, O, rel, pairs, n, depth - 1);
    return {Term::apply(TenseOperator::frame_induced(rel, kind), inner.term),
            [=, &O](const auto& x, const auto& y) { return oracle::tense(O, pairs, n, op, inner.eval(x, y)); }};
  }
  if (choice == 5) {
    auto inner = random_term(rng, O, rel, pairs, n, depth - 1);
    return {Term::comp(inner.term), [=, &O](const auto& x, const auto& y) {
              auto v = inner.eval(x, y);
              for (auto& e : v) e = O.comp[e];
              return v;
            }};
  }
  auto a = random_term(rng, O, rel, pairs, n, depth - 1);
  auto b = random_term(rng, O, rel, pairs, n, depth - 1);
  const auto pointwise = [=, &O](int kind) {
    return [=, &O](const oracle::Values& x, const oracle::Values& y) {
      auto u = a.eval(x, y), v = b.eval(x, y);
      for (std::size_t t = 0; t < u.size(); ++t) {
        u[t] = kind == 6 ? O.sand(u[t], v[t]) : kind == 7 ? O.simp(u[t], v[t]) : O.meet(u[t], v[t]);
      }
      return u;
    };
  };
  if (choice == 6) return {Term::sand(a.term, b.term), pointwise(6)};
  if (choice == 7) return {Term::simp(a.term, b.term), pointwise(7)};
  return {Term::meet(a.term, b.term), pointwise(8)};
}

}  // namespace

TEST(Term, Rendering) {
  const auto L = fixtures::lattice("fig1");
  const auto P = TenseOperator::frame_induced(Relation::full(2), TenseKind::P);
  const auto x = Term::var(0, "x"), y = Term::var(1, "y");
  EXPECT_EQ(Term::apply(P, Term::sand(x, y)).to_string(), "P(x * y)");
  EXPECT_EQ(Term::comp(Term::meet(x, y)).to_string(), "(x ^ y)'");
  EXPECT_EQ(Term::join(Term::simp(x, y), Term::comp(x)).to_string(), "(x -> y) v x'");
  EXPECT_EQ(Term::constant(L.top(), "1").to_string(), "1");
  EXPECT_EQ(orthomodular_law().statement(), "x <= y  =>  y = x v (y ^ x')");
}

TEST(Law, PassesOnOrthomodularLattice) {
  const auto L = fixtures::lattice("fig1");
  LawContext ctx(L, TimeSet::numbered(1), {});
  const auto r = check_law(ctx, orthomodular_law());
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.cases, 100u);
  EXPECT_FALSE(r.witness);
}

TEST(Law, HexagonWitnessIsFirstInCaseOrder) {
  const auto spec = fixtures::lattice_spec("o6");
  const auto L = Oml::build(spec);
  const oracle::Lattice O(spec);
  LawContext ctx(L, TimeSet::numbered(1), {});
  const auto r = check_law(ctx, orthomodular_law());
  ASSERT_EQ(r.verdict, Verdict::Fail);
  ASSERT_TRUE(r.witness);

  // Brute force over the same case order.
  const auto& space = ctx.space();
  std::optional<std::pair<int, int>> first;
  for (std::uint64_t i = 0; i < space.size() * space.size() && !first; ++i) {
    const int x = static_cast<int>(space.at(i / space.size())[0].index);
    const int y = static_cast<int>(space.at(i % space.size())[0].index);
    if (O.leq[x][y] && O.join(x, O.meet(y, O.comp[x])) != y) first = {x, y};
  }
  ASSERT_TRUE(first);
  EXPECT_EQ(r.witness->fields.at(0), (std::pair<std::string, std::string>{"x", O.names[first->first]}));
  EXPECT_EQ(r.witness->fields.at(1), (std::pair<std::string, std::string>{"y", O.names[first->second]}));

  const auto trace = r.witness->replay(L);
  ASSERT_FALSE(trace.empty());
  EXPECT_NE(trace.back().find("FAILS"), std::string::npos);
}

TEST(Law, SampledPassIsOneSided) {
  const auto L = fixtures::lattice("fig1");
  Quantifier q;
  q.budget = 1000;
  q.samples = 500;
  LawContext ctx(L, TimeSet::numbered(3), q);
  const auto x = Term::var(0, "x"), y = Term::var(1, "y");
  const auto r = check_law(ctx, Law{"meet", {"x", "y"}, std::nullopt, Term::meet(x, y), Cmp::Leq, x});
  EXPECT_EQ(r.verdict, Verdict::OneSided);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.cases, 500u);
  EXPECT_EQ(r.detail, "no counterexample in 500 samples");
}

TEST(Law, SampledFailureIsStillAFailure) {
  const auto L = fixtures::lattice("fig1");
  Quantifier q;
  q.budget = 1000;
  LawContext ctx(L, TimeSet::numbered(3), q);
  const auto x = Term::var(0, "x"), y = Term::var(1, "y");
  const auto r = check_law(ctx, Law{"bogus", {"x", "y"}, std::nullopt, x, Cmp::Leq, Term::meet(x, y)});
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_FALSE(r.exhaustive);
}

TEST(Law, OverBudgetThrowPolicy) {
  const auto L = fixtures::lattice("fig1");
  Quantifier q;
  q.budget = 1000;
  q.over_budget = OverBudget::Throw;
  LawContext ctx(L, TimeSet::numbered(3), q);
  const auto x = Term::var(0, "x");
  try {
    check_law(ctx, Law{"id", {"x", "y"}, std::nullopt, x, Cmp::Eq, x});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Law, WitnessIndependentOfThreadCount) {
  const auto L = fixtures::lattice("fig1");
  const auto f = TenseOperator::frame_induced(Relation::full(3), TenseKind::F);
  const auto x = Term::var(0, "x");
  const Law law{"F <= id", {"x"}, std::nullopt, Term::apply(f, x), Cmp::Leq, x};
  std::optional<std::vector<std::pair<std::string, std::string>>> seen;
  for (unsigned threads : {1U, 2U, 4U}) {
    Quantifier q;
    q.threads = threads;
    LawContext ctx(L, TimeSet::numbered(3), q);
    const auto r = check_law(ctx, law);
    ASSERT_EQ(r.verdict, Verdict::Fail);
    if (!seen) seen = r.witness->fields;
    EXPECT_EQ(r.witness->fields, *seen);
  }
}

TEST(LawProperty, EvaluateMatchesOracle) {
  std::mt19937 rng(11);
  for (const char* name : {"fig1", "mo2", "o6"}) {
    const auto spec = fixtures::lattice_spec(name);
    const auto L = Oml::build(spec);
    const oracle::Lattice O(spec);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + trial % 3;
      const auto pairs = oracle::random_relation(rng, n, 0.4);
      const auto rel = testing_helpers::relation_of(n, pairs);
      const auto t = random_term(rng, O, rel, pairs, n, 3);
      std::uniform_int_distribution<int> el(0, O.size() - 1);
      for (int k = 0; k < 10; ++k) {
        oracle::Values x(n), y(n);
        for (int i = 0; i < n; ++i) x[i] = el(rng), y[i] = el(rng);
        EXPECT_EQ(values_of(evaluate(L, t.term, {prop_of(x), prop_of(y)})), t.eval(x, y)) << t.term.to_string();
      }
    }
  }
}

TEST(LawProperty, VerdictMatchesBruteForce) {
  std::mt19937 rng(12);
  const auto spec = fixtures::lattice_spec("mo2");
  const auto L = Oml::build(spec);
  const oracle::Lattice O(spec);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 2;
    const auto pairs = oracle::random_relation(rng, n, 0.5);
    const auto rel = testing_helpers::relation_of(n, pairs);
    const auto a = random_term(rng, O, rel, pairs, n, 2);
    const auto b = random_term(rng, O, rel, pairs, n, 2);
    bool holds = true;
    const auto all = oracle::all_values(O.size(), n);
    for (const auto& x : all) {
      for (const auto& y : all) {
        const auto u = a.eval(x, y), v = b.eval(x, y);
        for (int t = 0; t < n; ++t) holds = holds && O.leq[u[t]][v[t]];
      }
    }
    LawContext ctx(L, TimeSet::numbered(n), {});
    const auto r = check_law(ctx, Law{"random", {"x", "y"}, std::nullopt, a.term, Cmp::Leq, b.term});
    EXPECT_EQ(r.verdict == Verdict::Pass, holds) << a.term.to_string() << " <= " << b.term.to_string();
    if (r.verdict == Verdict::Fail) {
      const auto trace = r.witness->replay(L);
      EXPECT_TRUE(std::any_of(trace.begin(), trace.end(), [](const auto& s) { return s.find("FAILS") != std::string::npos; }));
    }
  }
}
