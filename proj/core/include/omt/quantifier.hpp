#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace omt {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 20210601;

enum class OverBudget { Sample, Throw };

/// How a universally quantified statement over propositions is decided.
///
/// If the number of cases (|L|^|T| raised to the number of quantified
/// variables) is within `budget`, every case is enumerated. Otherwise the
/// statement is either refused (Throw) or tested on `samples` pseudo-random
/// cases drawn from `seed` (Sample); a sampled "holds" is one-sided.
struct Quantifier {
  std::uint64_t budget = kDefaultBudget;
  OverBudget over_budget = OverBudget::Sample;
  std::uint64_t samples = 0;  // 0 means: as many as the budget
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

/// The cases a quantifier will visit, in their canonical order.
class CasePlan {
 public:
  /// Throws Error(BudgetExceeded) when over budget and the policy is Throw.
  CasePlan(std::uint64_t space_size, unsigned arity, const Quantifier& q, std::string_view what);

  bool exhaustive() const noexcept { return exhaustive_; }
  unsigned arity() const noexcept { return arity_; }
  std::uint64_t count() const noexcept { return count_; }
  /// Codes of case i, one per quantified variable.
  void codes(std::uint64_t i, std::span<std::uint64_t> out) const noexcept;

 private:
  std::uint64_t space_size_;
  unsigned arity_;
  bool exhaustive_ = true;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> sampled_;
};

/// Returns true when the case is a counterexample.
using CaseChecker = std::function<bool(std::span<const std::uint64_t> codes)>;
/// Called once per worker so that checkers may own scratch buffers.
using CheckerFactory = std::function<CaseChecker()>;

struct SearchOutcome {
  bool exhaustive = true;
  std::uint64_t cases = 0;
  std::optional<std::vector<std::uint64_t>> counterexample;
};

/// First case (in plan order) that the checker rejects. Workers scan
/// interleaved blocks; the smallest failing index wins, so the result does
/// not depend on the thread count.
SearchOutcome find_counterexample(const CasePlan& plan, unsigned threads, const CheckerFactory& make);

/// Smallest i in [0, count) with fails(i), using up to `threads` workers.
std::optional<std::uint64_t> parallel_first(std::uint64_t count, unsigned threads,
                                            const std::function<std::function<bool(std::uint64_t)>()>& make);

/// Runs body(i) for every i in [0, count) across up to `threads` workers.
void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& body);

}  // namespace omt
