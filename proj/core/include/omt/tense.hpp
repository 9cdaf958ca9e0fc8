#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omt/element.hpp"
#include "omt/proposition.hpp"
#include "omt/quantifier.hpp"
#include "omt/timeframe.hpp"

namespace omt {

class Oml;

/// P: "has at some time been", F: "will at some time be",
/// H: "has always been", G: "will always be".
enum class TenseKind { P, F, H, G };

inline constexpr std::array<TenseKind, 4> kAllTenses{TenseKind::P, TenseKind::F, TenseKind::H, TenseKind::G};

char to_char(TenseKind k);

/// P(q)(s) = V{q(t) | t R s}     F(q)(s) = V{q(t) | s R t}
/// H(q)(s) = ^{q(t) | t R s}     G(q)(s) = ^{q(t) | s R t}
/// Empty joins are bottom and empty meets are top.
Proposition eval_tense(const Oml& L, const Relation& rel, TenseKind which, const Proposition& q);

inline Proposition eval_P(const Oml& L, const TimeFrame& f, const Proposition& q) {
  return eval_tense(L, f.relation(), TenseKind::P, q);
}
inline Proposition eval_F(const Oml& L, const TimeFrame& f, const Proposition& q) {
  return eval_tense(L, f.relation(), TenseKind::F, q);
}
inline Proposition eval_H(const Oml& L, const TimeFrame& f, const Proposition& q) {
  return eval_tense(L, f.relation(), TenseKind::H, q);
}
inline Proposition eval_G(const Oml& L, const TimeFrame& f, const Proposition& q) {
  return eval_tense(L, f.relation(), TenseKind::G, q);
}

enum class Shape { JoinLike, MeetLike };

/// An evaluatable map L^T -> L^T. Cheap to copy (shared immutable state);
/// two copies of the same operator share an identity key.
class TenseOperator {
 public:
  enum class Kind { FrameInduced, IdentityElseConstant, Tabulated, Composite };

  static TenseOperator frame_induced(const Relation& rel, TenseKind which, std::string label = {});
  static TenseOperator frame_induced(const TimeFrame& f, TenseKind which, std::string label = {});
  /// Output at t is q(t) for t in `special`, `fallback` elsewhere.
  static TenseOperator identity_else_constant(std::size_t points, const std::vector<TimePoint>& special,
                                              Element fallback, Shape shape, std::string label);
  static TenseOperator identity(std::size_t points);
  /// Explicit graph; apply() throws Error(TabulatedMiss) outside it.
  static TenseOperator tabulated(std::size_t points, std::vector<std::pair<Proposition, Proposition>> entries,
                                 std::string label);

  Kind kind() const noexcept;
  const std::string& label() const noexcept;
  std::size_t points() const noexcept;
  TenseOperator relabeled(std::string label) const;

  Proposition apply(const Oml& L, const Proposition& q) const;

  /// Set for frame-induced operators.
  std::optional<TenseKind> tense() const noexcept;
  const Relation* relation() const noexcept;
  /// Set for identity-else-constant operators.
  std::optional<Shape> shape() const noexcept;

  const void* identity_key() const noexcept { return impl_.get(); }

  struct Impl;

 private:
  explicit TenseOperator(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend TenseOperator compose(const TenseOperator& outer, const TenseOperator& inner);
};

inline Proposition apply(const Oml& L, const TenseOperator& A, const Proposition& q) { return A.apply(L, q); }

/// q |-> outer(inner(q)); labelled by concatenation ("P" . "G" = "PG").
TenseOperator compose(const TenseOperator& outer, const TenseOperator& inner);

/// Pointwise order on L^T.
bool prop_leq(const Oml& L, const Proposition& x, const Proposition& y);
Proposition pointwise_complement(const Oml& L, const Proposition& q);

struct OperatorQuadruple {
  TenseOperator P, F, H, G;

  /// The four operators induced by (T, rel); labels get `suffix` ("*").
  static OperatorQuadruple induced_by(const Relation& rel, const std::string& suffix = {});

  const TenseOperator& operator[](TenseKind k) const noexcept;
  std::size_t points() const noexcept { return P.points(); }
};

struct OperatorCounterexample {
  Proposition q;
  TimePoint t;
  Element lhs;
  Element rhs;
};

struct OperatorComparison {
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t cases = 0;
  std::optional<OperatorCounterexample> counterexample;
};

/// A <= B iff A(q) <= B(q) for all q. The counterexample is the first q in
/// odometer order, then the first time point.
OperatorComparison op_leq(const Oml& L, const TenseOperator& A, const TenseOperator& B, const Quantifier& quant = {});
OperatorComparison op_eq(const Oml& L, const TenseOperator& A, const TenseOperator& B, const Quantifier& quant = {});

/// Values of an operator on every proposition of a space, row `code`.
class OperatorTable {
 public:
  OperatorTable(const Oml& L, const TenseOperator& A, const PropositionSpace& space, unsigned threads = 1);

  std::span<const Element> row(std::uint64_t code) const noexcept {
    return {values_.data() + code * points_, points_};
  }

 private:
  std::size_t points_;
  std::vector<Element> values_;
};

}  // namespace omt
