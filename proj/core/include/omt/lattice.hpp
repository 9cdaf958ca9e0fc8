#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omt/bitmatrix.hpp"
#include "omt/element.hpp"
#include "omt/report.hpp"

namespace omt {

/// Presentation of a finite lattice by its cover relation and an optional
/// orthocomplementation, the way lattices are usually drawn.
struct LatticeSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // (lower, upper)
  std::vector<std::pair<std::string, std::string>> ortho;   // (x, x')

  bool operator==(const LatticeSpec&) const = default;
};

struct BuildOptions {
  /// Reject ortholattices that violate the orthomodular law.
  bool require_orthomodular = false;
};

/// Finite bounded lattice with optional orthocomplementation.
///
/// All structure is materialised at construction into dense tables: the
/// order as a bit matrix, binary join/meet as n*n index tables and the
/// complement as a permutation. Construction verifies every lattice and
/// ortholattice axiom, so downstream code may assume totality. Instances are
/// immutable.
class Oml {
 public:
  static Oml build(const LatticeSpec& spec, BuildOptions options = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return names_.size(); }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  bool has_ortho() const noexcept { return !comp_.empty(); }

  bool leq(Element x, Element y) const noexcept { return leq_.test(x.index, y.index); }
  Element join(Element x, Element y) const noexcept { return Element{join_[x.index * size() + y.index]}; }
  Element meet(Element x, Element y) const noexcept { return Element{meet_[x.index * size() + y.index]}; }
  /// Throws Error(NoOrtho) when the lattice was loaded without ortho pairs.
  Element complement(Element x) const;

  Element join_set(std::span<const Element> elems) const noexcept;
  Element meet_set(std::span<const Element> elems) const noexcept;

  const std::string& element_name(Element x) const { return names_.at(x.index); }
  std::optional<Element> find(std::string_view name) const;
  /// Throws Error(UnknownElement).
  Element element(std::string_view name) const;
  std::vector<Element> elements() const;

  /// Elements ordered by a linear extension of the order (stable on index).
  /// Starts at bottom and ends at top.
  std::span<const Element> linear_order() const noexcept { return linear_; }
  /// Position of each element in linear_order().
  std::uint32_t linear_rank(Element x) const noexcept { return rank_[x.index]; }

  /// Canonical presentation: Hasse covers in index order, ortho pairs once.
  LatticeSpec spec() const;

 private:
  Oml() = default;

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
  BitMatrix leq_;
  std::vector<std::uint32_t> join_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> comp_;
  std::vector<Element> linear_;
  std::vector<std::uint32_t> rank_;
  Element bottom_{};
  Element top_{};
};

Oml build_lattice(const LatticeSpec& spec, BuildOptions options = {});

inline Element join_set(const Oml& L, std::span<const Element> elems) { return L.join_set(elems); }
inline Element meet_set(const Oml& L, std::span<const Element> elems) { return L.meet_set(elems); }
inline Element complement(const Oml& L, Element x) { return L.complement(x); }

/// Exhaustive check of x <= y  =>  y = x v (y ^ x'). On failure the witness
/// is the lexicographically first (x, y) by index.
VerifyReport check_orthomodular(const Oml& L);

}  // namespace omt
