#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omt/bitmatrix.hpp"
#include "omt/element.hpp"

namespace omt {

/// Named time points, indexed in declaration order.
class TimeSet {
 public:
  TimeSet() = default;
  explicit TimeSet(std::vector<std::string> names);

  /// Points named "1", "2", ..., "n".
  static TimeSet numbered(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(TimePoint t) const { return names_.at(t.index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<TimePoint> find(std::string_view name) const;
  /// Throws Error(UnknownTimePoint).
  TimePoint point(std::string_view name) const;

  bool operator==(const TimeSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Binary relation on {0..n-1}; (s, t) present means "s before t".
/// May be empty, unlike the relation of a TimeFrame.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : bits_(n) {}

  static Relation full(std::size_t n);
  static Relation identity(std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool contains(TimePoint s, TimePoint t) const noexcept { return bits_.test(s.index, t.index); }
  void insert(TimePoint s, TimePoint t) noexcept { bits_.set(s.index, t.index, true); }
  void erase(TimePoint s, TimePoint t) noexcept { bits_.set(s.index, t.index, false); }

  bool empty() const noexcept { return bits_.count() == 0; }
  std::size_t pair_count() const noexcept { return bits_.count(); }
  /// Pairs in (s, t) index order.
  std::vector<std::pair<TimePoint, TimePoint>> pairs() const;

  std::vector<TimePoint> predecessors(TimePoint t) const;
  std::vector<TimePoint> successors(TimePoint s) const;

  bool is_serial() const noexcept;
  bool is_reflexive() const noexcept;
  bool is_transitive() const noexcept;

  bool subset_of(const Relation& other) const noexcept;
  Relation intersect(const Relation& other) const;
  /// Relation on the listed points (re-indexed in the listed order).
  Relation restrict(std::span<const TimePoint> subset) const;

  bool operator==(const Relation&) const = default;

 private:
  BitMatrix bits_;
};

/// A time frame (T, R): non-empty point set with a non-empty relation.
/// Relation properties are classified once at construction.
class TimeFrame {
 public:
  /// Throws Error(EmptyRelation) or Error(Incompatible) on size mismatch.
  TimeFrame(std::string name, TimeSet points, Relation rel);

  const std::string& name() const noexcept { return name_; }
  const TimeSet& points() const noexcept { return points_; }
  const Relation& relation() const noexcept { return rel_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool related(TimePoint s, TimePoint t) const noexcept { return rel_.contains(s, t); }

  bool is_serial() const noexcept { return serial_; }
  bool is_reflexive() const noexcept { return reflexive_; }
  bool is_transitive() const noexcept { return transitive_; }

  bool operator==(const TimeFrame& other) const { return points_ == other.points_ && rel_ == other.rel_; }

 private:
  std::string name_;
  TimeSet points_;
  Relation rel_;
  bool serial_ = false;
  bool reflexive_ = false;
  bool transitive_ = false;
};

inline bool is_serial(const TimeFrame& f) { return f.is_serial(); }
inline bool is_reflexive(const TimeFrame& f) { return f.is_reflexive(); }
inline bool is_transitive(const TimeFrame& f) { return f.is_transitive(); }

/// Frame on the subset (kept in original order, duplicates dropped) with
/// rel intersected with subset^2. Throws Error(EmptyRestriction) when the
/// subset or the restricted relation is empty.
TimeFrame restrict(const TimeFrame& f, std::span<const TimePoint> subset);
TimeFrame restrict(const TimeFrame& f, std::span<const std::string> subset_names);

/// Convenience: the usual order <= on points "1".."n".
TimeFrame chain_frame(std::size_t n, std::string name = "le");

}  // namespace omt
