#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace omt {

/// Dense square boolean matrix, one packed bit row per index.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t row, std::size_t col) const noexcept {
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1U;
  }
  void set(std::size_t row, std::size_t col, bool value = true) noexcept {
    auto& word = bits_[row * words_ + col / 64];
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    word = value ? (word | mask) : (word & ~mask);
  }

  // row(dst) |= row(src)
  void or_row(std::size_t dst, std::size_t src) noexcept {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] |= bits_[src * words_ + w];
  }

  // row(a) is a subset of row(b)
  bool row_subset(std::size_t a, std::size_t b) const noexcept {
    for (std::size_t w = 0; w < words_; ++w) {
      const auto x = bits_[a * words_ + w];
      if ((x & bits_[b * words_ + w]) != x) return false;
    }
    return true;
  }

  std::size_t count() const noexcept;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t BitMatrix::count() const noexcept {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

}  // namespace omt
