#include "omt/law.hpp"

#include <algorithm>
#include <limits>

#include "omt/error.hpp"
#include "omt/lattice.hpp"
#include "omt/sasaki.hpp"

namespace omt {

struct Term::Node {
  enum class Kind { Var, Const, Apply, SAnd, SImp, Meet, Join, Comp };

  Kind kind = Kind::Var;
  std::size_t var = 0;
  Element value{};
  std::string label;
  std::optional<TenseOperator> op;
  std::shared_ptr<const Node> a, b;
};

using Kind = Term::Node::Kind;

namespace {

std::shared_ptr<Term::Node> make(Kind k) {
  auto n = std::make_shared<Term::Node>();
  n->kind = k;
  return n;
}

bool is_binary(Kind k) { return k == Kind::SAnd || k == Kind::SImp || k == Kind::Meet || k == Kind::Join; }

std::string symbol(Kind k) {
  switch (k) {
    case Kind::SAnd: return " * ";
    case Kind::SImp: return " -> ";
    case Kind::Meet: return " ^ ";
    case Kind::Join: return " v ";
    default: return "";
  }
}

std::string render(const Term::Node& n, bool top) {
  switch (n.kind) {
    case Kind::Var:
    case Kind::Const: return n.label;
    case Kind::Apply: return n.op->label() + "(" + render(*n.a, true) + ")";
    case Kind::Comp: {
      const auto inner = render(*n.a, true);
      return is_binary(n.a->kind) ? "(" + inner + ")'" : inner + "'";
    }
    default: {
      auto s = render(*n.a, false) + symbol(n.kind) + render(*n.b, false);
      return top ? s : "(" + s + ")";
    }
  }
}

Element combine(const Oml& L, Kind k, Element x, Element y) {
  switch (k) {
    case Kind::SAnd: return sasaki_and(L, x, y);
    case Kind::SImp: return sasaki_imp(L, x, y);
    case Kind::Meet: return L.meet(x, y);
    case Kind::Join: return L.join(x, y);
    default: return x;
  }
}

Proposition eval_node(const Oml& L, const Term::Node& n, const std::vector<Proposition>& assignment,
                      std::size_t points) {
  switch (n.kind) {
    case Kind::Var: return assignment.at(n.var);
    case Kind::Const: return Proposition::constant(points, n.value);
    case Kind::Apply: return n.op->apply(L, eval_node(L, *n.a, assignment, points));
    case Kind::Comp: return pointwise_complement(L, eval_node(L, *n.a, assignment, points));
    default: {
      const auto x = eval_node(L, *n.a, assignment, points);
      const auto y = eval_node(L, *n.b, assignment, points);
      Proposition out = x;
      for (std::size_t t = 0; t < points; ++t) out[t] = combine(L, n.kind, x[t], y[t]);
      return out;
    }
  }
}

constexpr std::uint64_t kNoCode = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct Program {
  struct Instr {
    Kind kind;
    std::size_t var = 0;
    Element value{};
    const TenseOperator* op = nullptr;
    const OperatorTable* table = nullptr;
    std::uint32_t a = kNone, b = kNone;
  };
  std::vector<Instr> instrs;
  std::uint32_t premise_lhs = kNone, premise_rhs = kNone, lhs = kNone, rhs = kNone;
};

std::uint32_t compile(const Term::Node& n, Program& prog, LawContext& ctx) {
  Program::Instr in{n.kind};
  switch (n.kind) {
    case Kind::Var: in.var = n.var; break;
    case Kind::Const: in.value = n.value; break;
    case Kind::Apply:
      in.a = compile(*n.a, prog, ctx);
      in.op = &*n.op;
      in.table = ctx.table(*n.op);
      break;
    case Kind::Comp: in.a = compile(*n.a, prog, ctx); break;
    default:
      in.a = compile(*n.a, prog, ctx);
      in.b = compile(*n.b, prog, ctx);
      break;
  }
  prog.instrs.push_back(in);
  return static_cast<std::uint32_t>(prog.instrs.size() - 1);
}

class Evaluator {
 public:
  Evaluator(const Program& prog, const Oml& L, const PropositionSpace& space)
      : prog_(prog), L_(L), space_(space), T_(space.points()),
        slots_(prog.instrs.size() * space.points()), codes_(prog.instrs.size(), kNoCode) {}

  void run(std::span<const std::uint64_t> vars) {
    for (std::uint32_t k = 0; k < prog_.instrs.size(); ++k) {
      const auto& in = prog_.instrs[k];
      const std::span<Element> out(slots_.data() + std::size_t{k} * T_, T_);
      codes_[k] = kNoCode;
      switch (in.kind) {
        case Kind::Var:
          codes_[k] = vars[in.var];
          space_.decode(codes_[k], out);
          break;
        case Kind::Const: std::fill(out.begin(), out.end(), in.value); break;
        case Kind::Apply: {
          if (in.table) {
            auto c = codes_[in.a];
            if (c == kNoCode) c = space_.encode(slot(in.a));
            const auto row = in.table->row(c);
            std::copy(row.begin(), row.end(), out.begin());
          } else {
            const auto arg = slot(in.a);
            const auto image = in.op->apply(L_, Proposition(std::vector<Element>(arg.begin(), arg.end())));
            std::copy(image.values().begin(), image.values().end(), out.begin());
          }
          break;
        }
        case Kind::Comp: {
          const auto x = slot(in.a);
          for (std::size_t t = 0; t < T_; ++t) out[t] = L_.complement(x[t]);
          break;
        }
        default: {
          const auto x = slot(in.a);
          const auto y = slot(in.b);
          for (std::size_t t = 0; t < T_; ++t) out[t] = combine(L_, in.kind, x[t], y[t]);
          break;
        }
      }
    }
  }

  bool holds(std::uint32_t l, std::uint32_t r, Cmp cmp) const {
    const auto x = slot(l);
    const auto y = slot(r);
    for (std::size_t t = 0; t < T_; ++t) {
      if (cmp == Cmp::Eq ? x[t] != y[t] : !L_.leq(x[t], y[t])) return false;
    }
    return true;
  }

 private:
  std::span<const Element> slot(std::uint32_t k) const { return {slots_.data() + std::size_t{k} * T_, T_}; }

  const Program& prog_;
  const Oml& L_;
  const PropositionSpace& space_;
  std::size_t T_;
  std::vector<Element> slots_;
  std::vector<std::uint64_t> codes_;
};

std::string format_value(const Oml& L, const Proposition& q) {
  return q.size() == 1 ? L.element_name(q[0]) : format_values(L, q);
}

std::string cmp_symbol(Cmp c) { return c == Cmp::Eq ? " = " : " <= "; }

}  // namespace

Term Term::var(std::size_t index, std::string name) {
  auto n = make(Kind::Var);
  n->var = index;
  n->label = std::move(name);
  return Term(std::move(n));
}

Term Term::constant(Element value, std::string label) {
  auto n = make(Kind::Const);
  n->value = value;
  n->label = std::move(label);
  return Term(std::move(n));
}

Term Term::apply(const TenseOperator& A, const Term& arg) {
  auto n = make(Kind::Apply);
  n->op = A;
  n->a = arg.node_;
  return Term(std::move(n));
}

Term Term::sand(const Term& x, const Term& y) {
  auto n = make(Kind::SAnd);
  n->a = x.node_;
  n->b = y.node_;
  return Term(std::move(n));
}

Term Term::simp(const Term& x, const Term& y) {
  auto n = make(Kind::SImp);
  n->a = x.node_;
  n->b = y.node_;
  return Term(std::move(n));
}

Term Term::meet(const Term& x, const Term& y) {
  auto n = make(Kind::Meet);
  n->a = x.node_;
  n->b = y.node_;
  return Term(std::move(n));
}

Term Term::join(const Term& x, const Term& y) {
  auto n = make(Kind::Join);
  n->a = x.node_;
  n->b = y.node_;
  return Term(std::move(n));
}

Term Term::comp(const Term& x) {
  auto n = make(Kind::Comp);
  n->a = x.node_;
  return Term(std::move(n));
}

std::string Term::to_string() const { return render(*node_, true); }

std::string Law::statement() const {
  std::string s;
  if (premise) s = premise->first.to_string() + " <= " + premise->second.to_string() + "  =>  ";
  return s + lhs.to_string() + cmp_symbol(cmp) + rhs.to_string();
}

LawContext::LawContext(const Oml& L, TimeSet points, Quantifier quant)
    : L_(&L), points_(std::move(points)), space_(L, points_.size()), quant_(quant) {}

const OperatorTable* LawContext::table(const TenseOperator& A) {
  if (space_.size() > quant_.budget) return nullptr;
  auto it = tables_.find(A.identity_key());
  if (it == tables_.end()) {
    auto tab = std::make_unique<OperatorTable>(*L_, A, space_, quant_.threads);
    it = tables_.emplace(A.identity_key(), std::make_pair(A, std::move(tab))).first;
  }
  return it->second.second.get();
}

Proposition evaluate(const Oml& L, const Term& term, const std::vector<Proposition>& assignment) {
  std::size_t points = assignment.empty() ? 1 : assignment.front().size();
  return eval_node(L, term.node(), assignment, points);
}

std::vector<std::string> trace_law(const Oml& L, const Law& law, const TimeSet& points,
                                   const std::vector<Proposition>& assignment) {
  std::vector<std::string> lines;
  std::vector<std::string> seen;
  const std::size_t T = points.size();

  const auto visit = [&](auto&& self, const Term::Node& n) -> void {
    if (n.a) self(self, *n.a);
    if (n.b) self(self, *n.b);
    const auto text = render(n, true);
    if (std::find(seen.begin(), seen.end(), text) != seen.end()) return;
    seen.push_back(text);
    lines.push_back(text + " = " + format_value(L, eval_node(L, n, assignment, T)));
  };

  const auto compare = [&](const Term& l, const Term& r, Cmp cmp) {
    const auto x = eval_node(L, l.node(), assignment, T);
    const auto y = eval_node(L, r.node(), assignment, T);
    for (std::uint32_t t = 0; t < T; ++t) {
      const bool ok = cmp == Cmp::Eq ? x[t] == y[t] : L.leq(x[t], y[t]);
      std::string at = T == 1 ? std::string() : "at t=" + points.name(TimePoint{t}) + ": ";
      lines.push_back(at + L.element_name(x[t]) + cmp_symbol(cmp) + L.element_name(y[t]) + (ok ? "  holds" : "  FAILS"));
    }
  };

  if (law.premise) {
    visit(visit, law.premise->first.node());
    visit(visit, law.premise->second.node());
    lines.push_back("premise " + law.premise->first.to_string() + " <= " + law.premise->second.to_string() + ":");
    compare(law.premise->first, law.premise->second, Cmp::Leq);
  }
  visit(visit, law.lhs.node());
  visit(visit, law.rhs.node());
  lines.push_back("conclusion " + law.lhs.to_string() + cmp_symbol(law.cmp) + law.rhs.to_string() + ":");
  compare(law.lhs, law.rhs, law.cmp);
  return lines;
}

CheckResult check_law(LawContext& ctx, const Law& law) {
  CheckResult result;
  result.name = law.name;
  result.statement = law.statement();

  Program prog;
  if (law.premise) {
    prog.premise_lhs = compile(law.premise->first.node(), prog, ctx);
    prog.premise_rhs = compile(law.premise->second.node(), prog, ctx);
  }
  prog.lhs = compile(law.lhs.node(), prog, ctx);
  prog.rhs = compile(law.rhs.node(), prog, ctx);

  const Oml& L = ctx.lattice();
  const auto& space = ctx.space();
  const CasePlan plan(space.size(), static_cast<unsigned>(law.vars.size()), ctx.quantifier(), law.name);

  const auto outcome = find_counterexample(plan, ctx.quantifier().threads, [&]() -> CaseChecker {
    auto ev = std::make_shared<Evaluator>(prog, L, space);
    return [ev, &prog, &law](std::span<const std::uint64_t> codes) {
      ev->run(codes);
      if (prog.premise_lhs != kNone && !ev->holds(prog.premise_lhs, prog.premise_rhs, Cmp::Leq)) return false;
      return !ev->holds(prog.lhs, prog.rhs, law.cmp);
    };
  });

  result.cases = outcome.cases;
  result.exhaustive = outcome.exhaustive;
  if (!outcome.counterexample) {
    result.verdict = outcome.exhaustive ? Verdict::Pass : Verdict::OneSided;
    if (!outcome.exhaustive) result.detail = "no counterexample in " + std::to_string(outcome.cases) + " samples";
    return result;
  }

  result.verdict = Verdict::Fail;
  std::vector<Proposition> assignment;
  for (auto c : *outcome.counterexample) assignment.push_back(space.at(c));

  const std::size_t T = space.points();
  const auto lhs = eval_node(L, law.lhs.node(), assignment, T);
  const auto rhs = eval_node(L, law.rhs.node(), assignment, T);
  Witness w;
  for (std::size_t v = 0; v < law.vars.size(); ++v) w.fields.emplace_back(law.vars[v], format_value(L, assignment[v]));
  for (std::uint32_t t = 0; t < T; ++t) {
    const bool ok = law.cmp == Cmp::Eq ? lhs[t] == rhs[t] : L.leq(lhs[t], rhs[t]);
    if (ok) continue;
    if (T > 1) w.fields.emplace_back("t", ctx.points().name(TimePoint{t}));
    w.fields.emplace_back(law.lhs.to_string(), L.element_name(lhs[t]));
    w.fields.emplace_back(law.rhs.to_string(), L.element_name(rhs[t]));
    break;
  }
  w.replay = [law, points = ctx.points(), assignment](const Oml& M) { return trace_law(M, law, points, assignment); };
  result.witness = std::move(w);
  return result;
}

}  // namespace omt
