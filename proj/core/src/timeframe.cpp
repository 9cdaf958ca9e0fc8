#include "omt/timeframe.hpp"

#include <algorithm>

#include "omt/error.hpp"

namespace omt {

TimeSet::TimeSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::InvalidSpec, "time set is empty");
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorKind::InvalidSpec, "empty time point name");
    if (!index_.emplace(names_[i], i).second) {
      throw Error(ErrorKind::InvalidSpec, "duplicate time point '" + names_[i] + "'");
    }
  }
}

TimeSet TimeSet::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return TimeSet(std::move(names));
}

std::optional<TimePoint> TimeSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return TimePoint{it->second};
}

TimePoint TimeSet::point(std::string_view name) const {
  if (auto t = find(name)) return *t;
  throw Error(ErrorKind::UnknownTimePoint, "unknown time point '" + std::string(name) + "'");
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t = 0; t < n; ++t) r.insert(TimePoint{s}, TimePoint{t});
  return r;
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::uint32_t s = 0; s < n; ++s) r.insert(TimePoint{s}, TimePoint{s});
  return r;
}

std::vector<std::pair<TimePoint, TimePoint>> Relation::pairs() const {
  std::vector<std::pair<TimePoint, TimePoint>> out;
  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t = 0; t < n; ++t)
      if (bits_.test(s, t)) out.emplace_back(TimePoint{s}, TimePoint{t});
  return out;
}

std::vector<TimePoint> Relation::predecessors(TimePoint t) const {
  std::vector<TimePoint> out;
  for (std::uint32_t s = 0; s < size(); ++s)
    if (bits_.test(s, t.index)) out.push_back(TimePoint{s});
  return out;
}

std::vector<TimePoint> Relation::successors(TimePoint s) const {
  std::vector<TimePoint> out;
  for (std::uint32_t t = 0; t < size(); ++t)
    if (bits_.test(s.index, t)) out.push_back(TimePoint{t});
  return out;
}

bool Relation::is_serial() const noexcept {
  const auto n = size();
  for (std::size_t s = 0; s < n; ++s) {
    bool has_pred = false, has_succ = false;
    for (std::size_t t = 0; t < n; ++t) {
      has_pred = has_pred || bits_.test(t, s);
      has_succ = has_succ || bits_.test(s, t);
    }
    if (!has_pred || !has_succ) return false;
  }
  return true;
}

bool Relation::is_reflexive() const noexcept {
  for (std::size_t s = 0; s < size(); ++s)
    if (!bits_.test(s, s)) return false;
  return true;
}

bool Relation::is_transitive() const noexcept {
  const auto n = size();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (bits_.test(s, t) && !bits_.row_subset(t, s)) return false;
  return true;
}

bool Relation::subset_of(const Relation& other) const noexcept {
  if (other.size() != size()) return false;
  for (std::size_t s = 0; s < size(); ++s)
    for (std::size_t t = 0; t < size(); ++t)
      if (bits_.test(s, t) && !other.bits_.test(s, t)) return false;
  return true;
}

Relation Relation::intersect(const Relation& other) const {
  if (other.size() != size()) throw Error(ErrorKind::Incompatible, "relations over different point counts");
  Relation r(size());
  for (std::uint32_t s = 0; s < size(); ++s)
    for (std::uint32_t t = 0; t < size(); ++t)
      if (bits_.test(s, t) && other.bits_.test(s, t)) r.insert(TimePoint{s}, TimePoint{t});
  return r;
}

Relation Relation::restrict(std::span<const TimePoint> subset) const {
  Relation r(subset.size());
  for (std::uint32_t i = 0; i < subset.size(); ++i)
    for (std::uint32_t j = 0; j < subset.size(); ++j)
      if (contains(subset[i], subset[j])) r.insert(TimePoint{i}, TimePoint{j});
  return r;
}

TimeFrame::TimeFrame(std::string name, TimeSet points, Relation rel)
    : name_(std::move(name)), points_(std::move(points)), rel_(std::move(rel)) {
  if (points_.size() == 0) throw Error(ErrorKind::InvalidSpec, "frame '" + name_ + "' has no time points");
  if (rel_.size() != points_.size()) {
    throw Error(ErrorKind::Incompatible, "frame '" + name_ + "': relation size does not match point count");
  }
  if (rel_.empty()) throw Error(ErrorKind::EmptyRelation, "frame '" + name_ + "' has an empty relation");
  serial_ = rel_.is_serial();
  reflexive_ = rel_.is_reflexive();
  transitive_ = rel_.is_transitive();
}

TimeFrame restrict(const TimeFrame& f, std::span<const TimePoint> subset) {
  std::vector<TimePoint> kept(subset.begin(), subset.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) throw Error(ErrorKind::EmptyRestriction, "restriction to the empty set");
  std::vector<std::string> names;
  for (auto t : kept) {
    if (t.index >= f.size()) throw Error(ErrorKind::UnknownTimePoint, "index out of range in restriction");
    names.push_back(f.points().name(t));
  }
  Relation rel = f.relation().restrict(kept);
  if (rel.empty()) throw Error(ErrorKind::EmptyRestriction, "restriction of '" + f.name() + "' has no pairs");
  return TimeFrame(f.name(), TimeSet(std::move(names)), std::move(rel));
}

TimeFrame restrict(const TimeFrame& f, std::span<const std::string> subset_names) {
  std::vector<TimePoint> pts;
  for (const auto& n : subset_names) pts.push_back(f.points().point(n));
  return restrict(f, pts);
}

TimeFrame chain_frame(std::size_t n, std::string name) {
  Relation rel(n);
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t t = s; t < n; ++t) rel.insert(TimePoint{s}, TimePoint{t});
  return TimeFrame(std::move(name), TimeSet::numbered(n), std::move(rel));
}

}  // namespace omt
