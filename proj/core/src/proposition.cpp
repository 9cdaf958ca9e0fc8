#include "omt/proposition.hpp"

#include "omt/error.hpp"
#include "omt/lattice.hpp"

namespace omt {

std::string format_values(const Oml& L, const Proposition& q) {
  std::string out = "(";
  for (std::size_t t = 0; t < q.size(); ++t) {
    if (t != 0) out += ',';
    out += L.element_name(q[t]);
  }
  out += ')';
  return out;
}

PropositionSpace::PropositionSpace(const Oml& L, std::size_t points) : points_(points) {
  const auto order = L.linear_order();
  digit_to_element_.assign(order.begin(), order.end());
  element_to_digit_.assign(L.size(), 0);
  for (std::uint32_t d = 0; d < digit_to_element_.size(); ++d) element_to_digit_[digit_to_element_[d].index] = d;
  const std::uint64_t b = base();
  for (std::size_t i = 0; i < points; ++i) {
    if (size_ > UINT64_MAX / b) {
      throw Error(ErrorKind::BudgetExceeded,
                  std::to_string(b) + "^" + std::to_string(points) + " propositions cannot be indexed");
    }
    size_ *= b;
  }
}

Proposition PropositionSpace::at(std::uint64_t code) const {
  std::vector<Element> values(points_);
  decode(code, values);
  return Proposition(std::move(values));
}

void PropositionSpace::decode(std::uint64_t code, std::span<Element> out) const noexcept {
  const std::uint64_t b = base();
  for (std::size_t i = points_; i-- > 0;) {
    out[i] = digit_to_element_[code % b];
    code /= b;
  }
}

std::uint64_t PropositionSpace::encode(std::span<const Element> values) const noexcept {
  const std::uint64_t b = base();
  std::uint64_t code = 0;
  for (auto e : values) code = code * b + element_to_digit_[e.index];
  return code;
}

std::vector<PropositionSpace::Range> PropositionSpace::chunks(std::size_t k) const {
  std::vector<Range> out;
  if (k == 0) k = 1;
  const std::uint64_t per = size_ / k, extra = size_ % k;
  std::uint64_t first = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t len = per + (i < extra ? 1 : 0);
    out.emplace_back(this, first, first + len);
    first += len;
  }
  return out;
}

PropositionSpace::iterator::iterator(const PropositionSpace* space, std::uint64_t code)
    : space_(space), code_(code), digits_(space->points_, 0) {
  if (code_ >= space_->size_) return;
  std::uint64_t c = code_;
  const std::uint64_t b = space_->base();
  for (std::size_t i = space_->points_; i-- > 0;) {
    digits_[i] = static_cast<std::uint32_t>(c % b);
    c /= b;
  }
  std::vector<Element> values(space_->points_);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = space_->digit_to_element_[digits_[i]];
  current_ = Proposition(std::move(values));
}

PropositionSpace::iterator& PropositionSpace::iterator::operator++() {
  ++code_;
  const auto b = static_cast<std::uint32_t>(space_->base());
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < b) {
      current_[i] = space_->digit_to_element_[digits_[i]];
      break;
    }
    digits_[i] = 0;
    current_[i] = space_->digit_to_element_[0];
  }
  return *this;
}

}  // namespace omt
