#include "omt/quantifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "omt/error.hpp"

namespace omt {

__extension__ using Wide = unsigned __int128;
namespace {

constexpr std::uint64_t kBlock = 4096;

std::optional<std::uint64_t> checked_power(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

}  // namespace

CasePlan::CasePlan(std::uint64_t space_size, unsigned arity, const Quantifier& q, std::string_view what)
    : space_size_(space_size), arity_(arity) {
  const auto total = checked_power(space_size, arity);
  if (total && *total <= q.budget) {
    exhaustive_ = true;
    count_ = *total;
    return;
  }
  if (q.over_budget == OverBudget::Throw) {
    throw Error(ErrorKind::BudgetExceeded,
                std::string(what) + ": " + (total ? std::to_string(*total) : std::string("more than 2^64")) +
                    " cases exceed the budget of " + std::to_string(q.budget));
  }
  exhaustive_ = false;
  count_ = q.samples != 0 ? q.samples : q.budget;
  sampled_.resize(count_ * arity_);
  std::mt19937_64 rng(q.seed);
  std::uniform_int_distribution<std::uint64_t> any(0, space_size_ - 1);
  for (std::uint64_t i = 0; i < count_; ++i) {
    for (unsigned v = 0; v < arity_; ++v) {
      std::uint64_t code;
      if (v == 0) {
        // Stratify the first variable: sample i lands in the i-th slice.
        const auto lo = static_cast<std::uint64_t>((static_cast<Wide>(i) * space_size_) / count_);
        const auto hi = static_cast<std::uint64_t>((static_cast<Wide>(i + 1) * space_size_) / count_);
        code = hi > lo + 1 ? std::uniform_int_distribution<std::uint64_t>(lo, hi - 1)(rng) : lo;
      } else {
        code = any(rng);
      }
      sampled_[i * arity_ + v] = code;
    }
  }
}

void CasePlan::codes(std::uint64_t i, std::span<std::uint64_t> out) const noexcept {
  if (!exhaustive_) {
    for (unsigned v = 0; v < arity_; ++v) out[v] = sampled_[i * arity_ + v];
    return;
  }
  for (unsigned v = arity_; v-- > 0;) {
    out[v] = i % space_size_;
    i /= space_size_;
  }
}

std::optional<std::uint64_t> parallel_first(std::uint64_t count, unsigned threads,
                                            const std::function<std::function<bool(std::uint64_t)>()>& make) {
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, threads), std::max<std::uint64_t>(blocks, 1)));
  std::atomic<std::uint64_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;

  const auto guarded = [&](unsigned w, auto&& fn) {
    try {
      fn(w);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };

  const auto work = [&](unsigned w) {
    auto fails = make();
    for (std::uint64_t b = w; b < blocks; b += workers) {
      const std::uint64_t first = b * kBlock;
      if (first >= best.load(std::memory_order_relaxed)) return;
      const std::uint64_t last = std::min(count, first + kBlock);
      for (std::uint64_t i = first; i < last; ++i) {
        if (fails(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {}
          return;
        }
      }
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { guarded(w, work); });
  }
  if (error) std::rethrow_exception(error);
  const auto r = best.load();
  if (r == count) return std::nullopt;
  return r;
}

void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, threads), std::max<std::uint64_t>(count, 1)));
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::uint64_t i = next++; i < count; i = next++) body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

SearchOutcome find_counterexample(const CasePlan& plan, unsigned threads, const CheckerFactory& make) {
  SearchOutcome out;
  out.exhaustive = plan.exhaustive();
  out.cases = plan.count();
  const auto first = parallel_first(plan.count(), threads, [&] {
    auto check = make();
    return [&plan, check = std::move(check), buf = std::vector<std::uint64_t>(plan.arity())](std::uint64_t i) mutable {
      plan.codes(i, buf);
      return check(buf);
    };
  });
  if (first) {
    std::vector<std::uint64_t> codes(plan.arity());
    plan.codes(*first, codes);
    out.counterexample = std::move(codes);
  }
  return out;
}

}  // namespace omt
