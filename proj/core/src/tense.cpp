#include "omt/tense.hpp"

#include <map>
#include <variant>

#include "omt/error.hpp"
#include "omt/lattice.hpp"

namespace omt {

char to_char(TenseKind k) {
  switch (k) {
    case TenseKind::P: return 'P';
    case TenseKind::F: return 'F';
    case TenseKind::H: return 'H';
    case TenseKind::G: return 'G';
  }
  return '?';
}

namespace {

bool looks_back(TenseKind k) { return k == TenseKind::P || k == TenseKind::H; }
bool is_join(TenseKind k) { return k == TenseKind::P || k == TenseKind::F; }

void require_points(const Proposition& q, std::size_t points, const std::string& label) {
  if (q.size() != points) {
    throw Error(ErrorKind::Incompatible, "operator " + label + " expects " + std::to_string(points) +
                                             " time points, proposition has " + std::to_string(q.size()));
  }
}

}  // namespace

Proposition eval_tense(const Oml& L, const Relation& rel, TenseKind which, const Proposition& q) {
  require_points(q, rel.size(), std::string(1, to_char(which)));
  const auto n = static_cast<std::uint32_t>(rel.size());
  std::vector<Element> out(n);
  const bool back = looks_back(which);
  const bool join = is_join(which);
  for (std::uint32_t s = 0; s < n; ++s) {
    Element acc = join ? L.bottom() : L.top();
    for (std::uint32_t t = 0; t < n; ++t) {
      const bool linked = back ? rel.contains(TimePoint{t}, TimePoint{s}) : rel.contains(TimePoint{s}, TimePoint{t});
      if (!linked) continue;
      acc = join ? L.join(acc, q[t]) : L.meet(acc, q[t]);
    }
    out[s] = acc;
  }
  return Proposition(std::move(out));
}

struct TenseOperator::Impl {
  struct Frame {
    Relation rel;
    TenseKind which;
    std::vector<std::vector<std::uint32_t>> sources;
  };
  struct Rule {
    std::vector<bool> special;
    Element fallback;
    Shape shape;
  };
  struct Table {
    std::map<Proposition, Proposition> entries;
  };
  struct Comp {
    TenseOperator outer;
    TenseOperator inner;
  };

  std::string label;
  std::size_t points = 0;
  std::variant<Frame, Rule, Table, Comp> body;
};

TenseOperator TenseOperator::frame_induced(const Relation& rel, TenseKind which, std::string label) {
  Impl::Frame f{rel, which, {}};
  const auto n = static_cast<std::uint32_t>(rel.size());
  f.sources.resize(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = 0; t < n; ++t) {
      const bool linked =
          looks_back(which) ? rel.contains(TimePoint{t}, TimePoint{s}) : rel.contains(TimePoint{s}, TimePoint{t});
      if (linked) f.sources[s].push_back(t);
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->label = label.empty() ? std::string(1, to_char(which)) : std::move(label);
  impl->points = n;
  impl->body = std::move(f);
  return TenseOperator(std::move(impl));
}

TenseOperator TenseOperator::frame_induced(const TimeFrame& f, TenseKind which, std::string label) {
  return frame_induced(f.relation(), which, std::move(label));
}

TenseOperator TenseOperator::identity_else_constant(std::size_t points, const std::vector<TimePoint>& special,
                                                    Element fallback, Shape shape, std::string label) {
  Impl::Rule r{std::vector<bool>(points, false), fallback, shape};
  for (auto t : special) {
    if (t.index >= points) throw Error(ErrorKind::UnknownTimePoint, "special point out of range in " + label);
    r.special[t.index] = true;
  }
  auto impl = std::make_shared<Impl>();
  impl->label = std::move(label);
  impl->points = points;
  impl->body = std::move(r);
  return TenseOperator(std::move(impl));
}

TenseOperator TenseOperator::identity(std::size_t points) {
  std::vector<TimePoint> all(points);
  for (std::uint32_t i = 0; i < points; ++i) all[i] = TimePoint{i};
  return identity_else_constant(points, all, Element{}, Shape::JoinLike, "I");
}

TenseOperator TenseOperator::tabulated(std::size_t points, std::vector<std::pair<Proposition, Proposition>> entries,
                                       std::string label) {
  Impl::Table t;
  for (auto& [in, out] : entries) {
    require_points(in, points, label);
    require_points(out, points, label);
    if (!t.entries.emplace(std::move(in), std::move(out)).second) {
      throw Error(ErrorKind::InvalidSpec, "operator " + label + " tabulates the same proposition twice");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->label = std::move(label);
  impl->points = points;
  impl->body = std::move(t);
  return TenseOperator(std::move(impl));
}

TenseOperator::Kind TenseOperator::kind() const noexcept {
  return static_cast<Kind>(impl_->body.index());
}

const std::string& TenseOperator::label() const noexcept { return impl_->label; }

std::size_t TenseOperator::points() const noexcept { return impl_->points; }

TenseOperator TenseOperator::relabeled(std::string label) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->label = std::move(label);
  return TenseOperator(std::move(impl));
}

std::optional<TenseKind> TenseOperator::tense() const noexcept {
  if (auto* f = std::get_if<Impl::Frame>(&impl_->body)) return f->which;
  return std::nullopt;
}

const Relation* TenseOperator::relation() const noexcept {
  if (auto* f = std::get_if<Impl::Frame>(&impl_->body)) return &f->rel;
  return nullptr;
}

std::optional<Shape> TenseOperator::shape() const noexcept {
  if (auto* r = std::get_if<Impl::Rule>(&impl_->body)) return r->shape;
  return std::nullopt;
}

Proposition TenseOperator::apply(const Oml& L, const Proposition& q) const {
  require_points(q, impl_->points, impl_->label);
  struct Visitor {
    const Oml& L;
    const Proposition& q;
    const std::string& label;

    Proposition operator()(const Impl::Frame& f) const {
      std::vector<Element> out(f.sources.size());
      const bool join = is_join(f.which);
      for (std::size_t s = 0; s < f.sources.size(); ++s) {
        Element acc = join ? L.bottom() : L.top();
        for (auto t : f.sources[s]) acc = join ? L.join(acc, q[t]) : L.meet(acc, q[t]);
        out[s] = acc;
      }
      return Proposition(std::move(out));
    }
    Proposition operator()(const Impl::Rule& r) const {
      Proposition out = q;
      for (std::size_t t = 0; t < r.special.size(); ++t) {
        if (!r.special[t]) out[t] = r.fallback;
      }
      return out;
    }
    Proposition operator()(const Impl::Table& tab) const {
      auto it = tab.entries.find(q);
      if (it == tab.entries.end()) {
        throw Error(ErrorKind::TabulatedMiss, "operator " + label + " has no entry for " + format_values(L, q));
      }
      return it->second;
    }
    Proposition operator()(const Impl::Comp& c) const { return c.outer.apply(L, c.inner.apply(L, q)); }
  };
  return std::visit(Visitor{L, q, impl_->label}, impl_->body);
}

TenseOperator compose(const TenseOperator& outer, const TenseOperator& inner) {
  if (outer.points() != inner.points()) {
    throw Error(ErrorKind::Incompatible, "cannot compose " + outer.label() + " and " + inner.label());
  }
  auto impl = std::make_shared<TenseOperator::Impl>();
  impl->label = outer.label() + inner.label();
  impl->points = outer.points();
  impl->body = TenseOperator::Impl::Comp{outer, inner};
  return TenseOperator(std::move(impl));
}

bool prop_leq(const Oml& L, const Proposition& x, const Proposition& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::Incompatible, "propositions over different time sets");
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (!L.leq(x[t], y[t])) return false;
  }
  return true;
}

Proposition pointwise_complement(const Oml& L, const Proposition& q) {
  Proposition out = q;
  for (std::size_t t = 0; t < q.size(); ++t) out[t] = L.complement(q[t]);
  return out;
}

OperatorQuadruple OperatorQuadruple::induced_by(const Relation& rel, const std::string& suffix) {
  return OperatorQuadruple{TenseOperator::frame_induced(rel, TenseKind::P, "P" + suffix),
                           TenseOperator::frame_induced(rel, TenseKind::F, "F" + suffix),
                           TenseOperator::frame_induced(rel, TenseKind::H, "H" + suffix),
                           TenseOperator::frame_induced(rel, TenseKind::G, "G" + suffix)};
}

const TenseOperator& OperatorQuadruple::operator[](TenseKind k) const noexcept {
  switch (k) {
    case TenseKind::P: return P;
    case TenseKind::F: return F;
    case TenseKind::H: return H;
    case TenseKind::G: return G;
  }
  return P;
}

namespace {

OperatorComparison compare(const Oml& L, const TenseOperator& A, const TenseOperator& B, const Quantifier& quant,
                           bool equality) {
  if (A.points() != B.points()) throw Error(ErrorKind::Incompatible, "operators over different time sets");
  const PropositionSpace space(L, A.points());
  const CasePlan plan(space.size(), 1, quant, A.label() + (equality ? " = " : " <= ") + B.label());
  const auto related = [&L, equality](Element a, Element b) { return equality ? a == b : L.leq(a, b); };

  auto outcome = find_counterexample(plan, quant.threads, [&]() -> CaseChecker {
    return [&](std::span<const std::uint64_t> codes) {
      const auto q = space.at(codes[0]);
      const auto a = A.apply(L, q);
      const auto b = B.apply(L, q);
      for (std::size_t t = 0; t < q.size(); ++t) {
        if (!related(a[t], b[t])) return true;
      }
      return false;
    };
  });

  OperatorComparison out;
  out.exhaustive = outcome.exhaustive;
  out.cases = outcome.cases;
  if (outcome.counterexample) {
    out.holds = false;
    auto q = space.at((*outcome.counterexample)[0]);
    const auto a = A.apply(L, q);
    const auto b = B.apply(L, q);
    for (std::uint32_t t = 0; t < q.size(); ++t) {
      if (!related(a[t], b[t])) {
        out.counterexample = OperatorCounterexample{std::move(q), TimePoint{t}, a[t], b[t]};
        break;
      }
    }
  }
  return out;
}

}  // namespace

OperatorComparison op_leq(const Oml& L, const TenseOperator& A, const TenseOperator& B, const Quantifier& quant) {
  return compare(L, A, B, quant, false);
}

OperatorComparison op_eq(const Oml& L, const TenseOperator& A, const TenseOperator& B, const Quantifier& quant) {
  return compare(L, A, B, quant, true);
}

OperatorTable::OperatorTable(const Oml& L, const TenseOperator& A, const PropositionSpace& space, unsigned threads)
    : points_(space.points()), values_(space.size() * space.points()) {
  if (A.points() != space.points()) throw Error(ErrorKind::Incompatible, "operator/space point mismatch");
  const std::uint64_t block = 1024;
  const std::uint64_t blocks = (space.size() + block - 1) / block;
  parallel_for(blocks, threads, [&](std::uint64_t b) {
    const std::uint64_t first = b * block;
    const std::uint64_t last = std::min(space.size(), first + block);
    for (auto it = space.range(first, last).begin(); it.code() < last; ++it) {
      const auto image = A.apply(L, *it);
      std::copy(image.values().begin(), image.values().end(), values_.begin() + it.code() * points_);
    }
  });
}

}  // namespace omt
