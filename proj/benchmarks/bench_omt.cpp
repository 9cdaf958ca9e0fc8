#include <benchmark/benchmark.h>

#include "omt/fixtures.hpp"
#include "omt/induction.hpp"
#include "omt/law.hpp"
#include "omt/tense.hpp"
#include "omt/verify.hpp"

using namespace omt;

namespace {

Quantifier with_threads(const benchmark::State& state) {
  Quantifier q;
  q.threads = static_cast<unsigned>(state.range(0));
  return q;
}

void BM_EvalTense(benchmark::State& state) {
  const auto L = fixtures::lattice("fig1");
  const auto f = fixtures::le(static_cast<std::size_t>(state.range(0)));
  const auto q = Proposition::constant(f.points().size(), L.element("a"));
  for (auto _ : state) benchmark::DoNotOptimize(eval_G(L, f, eval_P(L, f, q)));
}
BENCHMARK(BM_EvalTense)->Arg(5)->Arg(20)->Arg(64);

void BM_OperatorTable(benchmark::State& state) {
  const auto L = fixtures::lattice("fig1");
  const auto f = fixtures::le(5);
  const PropositionSpace space(L, 5);
  const auto P = TenseOperator::frame_induced(f, TenseKind::P);
  for (auto _ : state) {
    OperatorTable table(L, P, space, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(table.row(0));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(space.size()));
}
BENCHMARK(BM_OperatorTable)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_InduceRuleQuadruple(benchmark::State& state) {
  const auto L = fixtures::lattice("fig1");
  const auto ops = fixtures::rule_quadruple(L, 5);
  const auto q = with_threads(state);
  for (auto _ : state) benchmark::DoNotOptimize(induce_R3(L, ops, q).relation.pair_count());
}
BENCHMARK(BM_InduceRuleQuadruple)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

// Two quantified variables over 10^3 propositions each: 10^6 cases, all
// visited because the law holds.
void BM_PairwiseLaw(benchmark::State& state) {
  const auto L = fixtures::lattice("fig1");
  const auto f = fixtures::le(3);
  const auto P = TenseOperator::frame_induced(f, TenseKind::P);
  const auto x = Term::var(0, "x"), y = Term::var(1, "y");
  const Law law{"monotone", {"x", "y"}, std::nullopt, Term::apply(P, Term::meet(x, y)), Cmp::Leq,
                Term::meet(Term::apply(P, x), Term::apply(P, y))};
  for (auto _ : state) {
    LawContext ctx(L, f.points(), with_threads(state));
    benchmark::DoNotOptimize(check_law(ctx, law).verdict);
  }
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_PairwiseLaw)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Thm7Suite(benchmark::State& state) {
  const auto L = fixtures::lattice("fig1");
  const auto in = SuiteInstance::of_frame(fixtures::le(3), with_threads(state));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(SuiteId::Thm7, L, in).verdict());
}
BENCHMARK(BM_Thm7Suite)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
