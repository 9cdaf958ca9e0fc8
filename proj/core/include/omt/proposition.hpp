#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "omt/element.hpp"

namespace omt {

class Oml;
class TimeSet;

/// A time-dependent proposition: one lattice element per time point.
class Proposition {
 public:
  Proposition() = default;
  explicit Proposition(std::vector<Element> values) : values_(std::move(values)) {}

  static Proposition constant(std::size_t points, Element value) {
    return Proposition(std::vector<Element>(points, value));
  }

  std::size_t size() const noexcept { return values_.size(); }
  Element operator[](std::size_t t) const noexcept { return values_[t]; }
  Element& operator[](std::size_t t) noexcept { return values_[t]; }
  Element at(TimePoint t) const { return values_.at(t.index); }
  std::span<const Element> values() const noexcept { return values_; }

  bool operator==(const Proposition&) const = default;
  auto operator<=>(const Proposition&) const = default;

 private:
  std::vector<Element> values_;
};

/// "(c',b',1)" using element names.
std::string format_values(const Oml& L, const Proposition& q);

/// The finite set L^T, indexed in odometer order.
///
/// Each proposition is a number in base |L| with the first time point as
/// the most significant digit. Digit d stands for the d-th element of a
/// linear extension of the lattice order, so code 0 is constant-bottom and
/// the last code is constant-top.
class PropositionSpace {
 public:
  /// Throws Error(BudgetExceeded) when |L|^points does not fit in 64 bits.
  PropositionSpace(const Oml& L, std::size_t points);

  std::size_t points() const noexcept { return points_; }
  std::size_t base() const noexcept { return digit_to_element_.size(); }
  std::uint64_t size() const noexcept { return size_; }

  Proposition at(std::uint64_t code) const;
  void decode(std::uint64_t code, std::span<Element> out) const noexcept;
  std::uint64_t encode(std::span<const Element> values) const noexcept;
  std::uint64_t encode(const Proposition& q) const noexcept { return encode(q.values()); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Proposition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Proposition*;
    using reference = const Proposition&;

    iterator() = default;
    iterator(const PropositionSpace* space, std::uint64_t code);

    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    std::uint64_t code() const noexcept { return code_; }

    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.code_ == b.code_; }

   private:
    const PropositionSpace* space_ = nullptr;
    std::uint64_t code_ = 0;
    std::vector<std::uint32_t> digits_;
    Proposition current_;
  };

  /// Codes [first, last) as an iterable range.
  class Range {
   public:
    Range(const PropositionSpace* space, std::uint64_t first, std::uint64_t last)
        : space_(space), first_(first), last_(last) {}
    iterator begin() const { return iterator(space_, first_); }
    iterator end() const { return iterator(space_, last_); }
    std::uint64_t size() const noexcept { return last_ - first_; }

   private:
    const PropositionSpace* space_;
    std::uint64_t first_, last_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size_); }
  Range range(std::uint64_t first, std::uint64_t last) const { return Range(this, first, last); }
  /// k contiguous chunks covering the space in order; sizes differ by at most 1.
  std::vector<Range> chunks(std::size_t k) const;

 private:
  std::size_t points_;
  std::uint64_t size_ = 1;
  std::vector<Element> digit_to_element_;
  std::vector<std::uint32_t> element_to_digit_;
};

/// Realises "for all q in L^T": all |L|^|T| propositions in odometer order.
inline PropositionSpace enumerate_propositions(const Oml& L, std::size_t points) {
  return PropositionSpace(L, points);
}

}  // namespace omt
