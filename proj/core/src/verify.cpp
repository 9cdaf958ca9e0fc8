#include "omt/verify.hpp"

#include <algorithm>
#include <functional>

#include "omt/error.hpp"
#include "omt/extension.hpp"
#include "omt/induction.hpp"
#include "omt/lattice.hpp"
#include "omt/law.hpp"

namespace omt {
namespace {

constexpr std::array<std::string_view, 13> kSuiteNames{
    "thm1", "thm2", "thm3", "prop1", "lemma1", "thm6", "thm7", "thm4-roundtrip", "cor1",
    "ext-pf", "ext-hg", "demorgan", "oml-law",
};

CheckResult skipped(std::string name, std::string reason) {
  CheckResult c;
  c.name = std::move(name);
  c.verdict = Verdict::Skipped;
  c.detail = std::move(reason);
  c.cases = 0;
  return c;
}

std::string describe(const Oml& L, const SuiteInstance& in) {
  std::string s = "lattice=" + L.name();
  if (in.frame) s += " frame=" + in.frame->name();
  if (in.ops) {
    s += " ops=" + in.ops->P.label() + "," + in.ops->F.label() + "," + in.ops->H.label() + "," + in.ops->G.label();
  }
  s += " |T|=" + std::to_string(in.points.size());
  s += " budget=" + std::to_string(in.quant.budget);
  return s;
}

bool is_orthomodular(const Oml& L) { return L.has_ortho() && check_orthomodular(L).verdict() == Verdict::Pass; }

/// The unmet precondition, if any.
std::optional<std::string> missing(const Oml& L, const SuiteInstance& in, SuiteId id) {
  const auto frame = [&]() -> std::optional<std::string> {
    if (!in.frame) return "requires a time frame";
    return std::nullopt;
  };
  switch (id) {
    case SuiteId::Thm1:
    case SuiteId::Thm2:
      if (auto m = frame()) return m;
      if (!in.frame->is_serial()) return "requires serial R";
      return std::nullopt;
    case SuiteId::Thm3:
      if (auto m = frame()) return m;
      if (!in.frame->is_reflexive()) return "requires reflexive R";
      return std::nullopt;
    case SuiteId::Thm4Roundtrip:
      return frame();
    case SuiteId::DeMorgan:
      if (auto m = frame()) return m;
      if (!L.has_ortho()) return "requires an orthocomplemented lattice";
      return std::nullopt;
    case SuiteId::OmlLaw:
      if (!L.has_ortho()) return "requires an orthocomplemented lattice";
      return std::nullopt;
    case SuiteId::Prop1:
    case SuiteId::Lemma1:
      if (!is_orthomodular(L)) return "requires an orthomodular lattice";
      return std::nullopt;
    case SuiteId::Thm6:
      if (!is_orthomodular(L)) return "requires an orthomodular lattice";
      if (!in.frame && !in.ops && in.extra.empty()) return "requires a time frame or operators";
      return std::nullopt;
    case SuiteId::Thm7:
      if (!is_orthomodular(L)) return "requires an orthomodular lattice";
      if (auto m = frame()) return m;
      if (!in.frame->is_reflexive()) return "requires reflexive R";
      return std::nullopt;
    case SuiteId::Cor1:
    case SuiteId::ExtPf:
    case SuiteId::ExtHg:
      if (!in.frame && !in.ops) return "requires a time frame or operators";
      return std::nullopt;
  }
  return std::nullopt;
}

OperatorQuadruple frame_ops(const SuiteInstance& in) { return OperatorQuadruple::induced_by(in.frame->relation()); }

OperatorQuadruple given_ops(const SuiteInstance& in) { return in.ops ? *in.ops : frame_ops(in); }

const Term p = Term::var(0, "p");
const Term q = Term::var(1, "q");
const Term x = Term::var(0, "x");
const Term y = Term::var(1, "y");

Term zero(const Oml& L) { return Term::constant(L.bottom(), "0"); }
Term one(const Oml& L) { return Term::constant(L.top(), "1"); }

Law law_q(const Term& lhs, Cmp cmp, const Term& rhs) {
  Law l{{}, {"q"}, std::nullopt, lhs, cmp, rhs};
  l.name = l.statement();
  return l;
}

Law law_pq(const Term& lhs, Cmp cmp, const Term& rhs, std::optional<std::pair<Term, Term>> premise = std::nullopt) {
  Law l{{}, {"p", "q"}, std::move(premise), lhs, cmp, rhs};
  l.name = l.statement();
  return l;
}

Law law_xy(const Term& lhs, Cmp cmp, const Term& rhs, std::optional<std::pair<Term, Term>> premise = std::nullopt) {
  Law l{{}, {"x", "y"}, std::move(premise), lhs, cmp, rhs};
  l.name = l.statement();
  return l;
}

Law law0(const Term& lhs, const Term& rhs) {
  Law l{{}, {}, std::nullopt, lhs, Cmp::Eq, rhs};
  l.name = l.statement();
  return l;
}

Term A(const TenseOperator& op, const Term& t) { return Term::apply(op, t); }

void run_laws(VerifyReport& report, LawContext& ctx, const std::vector<Law>& laws, const std::string& prefix = {}) {
  for (const auto& law : laws) {
    auto c = check_law(ctx, law);
    if (!prefix.empty()) c.name = prefix + " " + c.name;
    report.checks.push_back(std::move(c));
  }
}

// Laws with a single-variable quantifier need the variable at index 0.
const Term qv = Term::var(0, "q");

void suite_thm1(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  const auto ops = frame_ops(in);
  LawContext ctx(L, in.points, in.quant);
  std::vector<Law> part1;
  for (auto k : kAllTenses) part1.push_back(law0(A(ops[k], zero(L)), zero(L)));
  for (auto k : kAllTenses) part1.push_back(law0(A(ops[k], one(L)), one(L)));
  run_laws(r, ctx, part1, "(i)");

  std::vector<Law> part2;
  for (auto k : kAllTenses) part2.push_back(law_pq(A(ops[k], p), Cmp::Leq, A(ops[k], q), std::pair{p, q}));
  run_laws(r, ctx, part2, "(ii)");

  const auto& [P, F, H, G] = ops;
  run_laws(r, ctx,
           {law_q(A(P, A(G, qv)), Cmp::Leq, qv), law_q(qv, Cmp::Leq, A(G, A(P, qv))),
            law_q(A(F, A(H, qv)), Cmp::Leq, qv), law_q(qv, Cmp::Leq, A(H, A(F, qv)))},
           "(iii)");
}

void suite_thm2(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  const auto& [P, F, H, G] = frame_ops(in);
  LawContext ctx(L, in.points, in.quant);
  run_laws(r, ctx, {law_q(A(H, qv), Cmp::Leq, A(P, qv)), law_q(A(G, qv), Cmp::Leq, A(F, qv))}, "(i)");
  if (!in.frame->is_reflexive()) {
    r.checks.push_back(skipped("(ii)", "requires reflexive R"));
    return;
  }
  run_laws(r, ctx,
           {law_q(A(H, qv), Cmp::Leq, qv), law_q(qv, Cmp::Leq, A(P, qv)), law_q(A(G, qv), Cmp::Leq, qv),
            law_q(qv, Cmp::Leq, A(F, qv))},
           "(ii)");
}

void suite_thm3(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  const auto ops = frame_ops(in);
  LawContext ctx(L, in.points, in.quant);
  std::vector<Law> part1;
  for (auto a : kAllTenses) {
    for (auto b : {TenseKind::P, TenseKind::F}) part1.push_back(law_q(A(ops[a], qv), Cmp::Leq, A(ops[a], A(ops[b], qv))));
  }
  for (auto a : kAllTenses) {
    for (auto c : {TenseKind::H, TenseKind::G}) part1.push_back(law_q(A(ops[a], A(ops[c], qv)), Cmp::Leq, A(ops[a], qv)));
  }
  run_laws(r, ctx, part1, "(i)");
  if (!in.frame->is_transitive()) {
    r.checks.push_back(skipped("(ii)", "requires reflexive and transitive R"));
    return;
  }
  std::vector<Law> part2;
  for (auto a : kAllTenses) part2.push_back(law_q(A(ops[a], A(ops[a], qv)), Cmp::Eq, A(ops[a], qv)));
  run_laws(r, ctx, part2, "(ii)");
}

void suite_demorgan(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  const auto& [P, F, H, G] = frame_ops(in);
  LawContext ctx(L, in.points, in.quant);
  const auto c = [](const Term& t) { return Term::comp(t); };
  run_laws(r, ctx,
           {law_q(A(H, qv), Cmp::Eq, c(A(P, c(qv)))), law_q(A(G, qv), Cmp::Eq, c(A(F, c(qv)))),
            law_q(A(P, qv), Cmp::Eq, c(A(H, c(qv)))), law_q(A(F, qv), Cmp::Eq, c(A(G, c(qv))))});
}

LawContext element_context(const Oml& L, const SuiteInstance& in) { return LawContext(L, TimeSet::numbered(1), in.quant); }

void suite_prop1(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  auto ctx = element_context(L, in);
  const Term a = Term::var(0, "a"), b = Term::var(1, "b"), c = Term::var(2, "c");
  const auto law_a = [](const Term& lhs, Cmp cmp, const Term& rhs) {
    Law l{{}, {"a"}, std::nullopt, lhs, cmp, rhs};
    l.name = l.statement();
    return l;
  };
  const auto law_abc = [](const Term& lhs, const Term& rhs, std::pair<Term, Term> premise) {
    Law l{{}, {"a", "b", "c"}, std::move(premise), lhs, Cmp::Leq, rhs};
    l.name = l.statement();
    return l;
  };
  run_laws(r, ctx, {law_a(Term::sand(a, one(L)), Cmp::Eq, a), law_a(Term::sand(one(L), a), Cmp::Eq, a)}, "(i)");
  run_laws(r, ctx,
           {law_abc(a, Term::simp(b, c), {Term::sand(a, b), c}),
            law_abc(Term::sand(a, b), c, {a, Term::simp(b, c)})},
           "(ii)");
  run_laws(r, ctx, {law_a(Term::comp(a), Cmp::Eq, Term::simp(a, zero(L)))}, "(iii)");
  const Term xe = Term::var(0, "x"), ye = Term::var(1, "y");
  run_laws(r, ctx,
           {law_xy(Term::sand(xe, ye), Cmp::Leq, ye),
            law_xy(Term::simp(xe, ye), Cmp::Eq, Term::comp(Term::sand(Term::comp(ye), xe)))},
           "projection");
}

void suite_lemma1(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  auto ctx = element_context(L, in);
  const Term a = Term::var(0, "a"), b = Term::var(1, "b");
  const auto law_ab = [](const Term& lhs, Cmp cmp, const Term& rhs) {
    Law l{{}, {"a", "b"}, std::nullopt, lhs, cmp, rhs};
    l.name = l.statement();
    return l;
  };
  run_laws(r, ctx, {law_ab(Term::sand(Term::simp(a, b), a), Cmp::Eq, Term::meet(a, b))}, "(i)");
  run_laws(r, ctx, {law_ab(a, Cmp::Leq, Term::simp(b, Term::sand(a, b)))}, "(ii)");
}

/// Combines the truth values of two universally quantified statements into
/// a check that passes when they agree.
CheckResult agreement(std::string name, const CheckResult& first, const CheckResult& second) {
  CheckResult c;
  c.name = std::move(name);
  c.statement = "(" + first.statement + ")  <=>  (" + second.statement + ")";
  c.cases = first.cases + second.cases;
  c.exhaustive = first.exhaustive && second.exhaustive;
  const auto truth = [](const CheckResult& r) -> std::string {
    switch (r.verdict) {
      case Verdict::Pass: return "true";
      case Verdict::Fail: return "false";
      case Verdict::OneSided: return "no counterexample";
      case Verdict::Skipped: return "skipped";
    }
    return "?";
  };
  c.detail = "(i) " + truth(first) + ", (ii) " + truth(second);
  const bool f1 = first.verdict == Verdict::Fail, f2 = second.verdict == Verdict::Fail;
  if (f1 == f2) {
    c.verdict = f1 || c.exhaustive ? Verdict::Pass : Verdict::OneSided;
  } else {
    const auto& other = f1 ? second : first;
    c.verdict = other.verdict == Verdict::Pass ? Verdict::Fail : Verdict::OneSided;
    c.witness = f1 ? first.witness : second.witness;
  }
  return c;
}

void suite_oml_law(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  auto ctx = element_context(L, in);
  const Term xe = Term::var(0, "x"), ye = Term::var(1, "y");
  const auto c = [](const Term& t) { return Term::comp(t); };
  const auto form1 = check_law(ctx, law_xy(ye, Cmp::Eq, Term::join(xe, Term::meet(ye, c(xe))), std::pair{xe, ye}));
  const auto form2 = check_law(ctx, law_xy(xe, Cmp::Eq, Term::meet(ye, Term::join(xe, c(ye))), std::pair{xe, ye}));
  r.checks.push_back(form1);
  r.checks.push_back(form2);
  r.checks.push_back(agreement("forms agree", form1, form2));
  run_laws(r, ctx,
           {law_xy(c(Term::join(xe, ye)), Cmp::Eq, Term::meet(c(xe), c(ye))),
            law_xy(c(Term::meet(xe, ye)), Cmp::Eq, Term::join(c(xe), c(ye)))},
           "De Morgan");
}

std::vector<TenseOperator> thm6_operators(const SuiteInstance& in) {
  std::vector<TenseOperator> out;
  if (in.frame) {
    const auto ops = frame_ops(in);
    for (auto k : kAllTenses) out.push_back(ops[k]);
  }
  if (in.ops) {
    for (auto k : kAllTenses) out.push_back(in.ops->operator[](k));
  }
  out.insert(out.end(), in.extra.begin(), in.extra.end());
  return out;
}

std::pair<Law, Law> thm6_laws(const TenseOperator& op) {
  return {law_xy(Term::sand(A(op, x), A(op, y)), Cmp::Leq, A(op, Term::sand(x, y))),
          law_xy(A(op, Term::simp(x, y)), Cmp::Leq, Term::simp(A(op, x), A(op, y)))};
}

void suite_thm6(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  LawContext ctx(L, in.points, in.quant);
  for (const auto& op : thm6_operators(in)) {
    const auto [l1, l2] = thm6_laws(op);
    r.checks.push_back(agreement(op.label() + ": (i) <=> (ii)", check_law(ctx, l1), check_law(ctx, l2)));
  }
}

void suite_thm7(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  const auto ops = frame_ops(in);
  LawContext ctx(L, in.points, in.quant);
  constexpr std::array<TenseKind, 2> kPF{TenseKind::P, TenseKind::F};
  constexpr std::array<TenseKind, 2> kHG{TenseKind::H, TenseKind::G};
  const auto sand = [](const Term& a, const Term& b) { return Term::sand(a, b); };
  const auto simp = [](const Term& a, const Term& b) { return Term::simp(a, b); };
  const auto tag = [](const char* item, TenseKind k1, TenseKind k2) {
    return std::string(item) + "[" + to_char(k1) + "," + to_char(k2) + "]";
  };
  const auto add = [&](std::string name, Law law) {
    auto c = check_law(ctx, law);
    c.name = std::move(name);
    r.checks.push_back(std::move(c));
  };
  for (auto a1 : kPF) {
    for (auto a2 : kPF) add(tag("(i)", a1, a2), law_pq(p, Cmp::Leq, simp(q, A(ops[a1], sand(A(ops[a2], p), q)))));
  }
  for (auto a : kPF) {
    for (auto b : kHG) add(tag("(ii)", a, b), law_pq(A(ops[b], sand(p, q)), Cmp::Leq, sand(A(ops[a], p), q)));
  }
  for (auto a : kPF) {
    for (auto b : kHG) add(tag("(iii)", a, b), law_pq(A(ops[b], p), Cmp::Leq, simp(q, A(ops[a], sand(p, q)))));
  }
  for (auto b1 : kHG) {
    for (auto b2 : kHG) add(tag("(iv)", b1, b2), law_pq(A(ops[b1], sand(A(ops[b2], p), q)), Cmp::Leq, sand(p, q)));
  }
  for (auto a1 : kPF) {
    for (auto a2 : kPF) add(tag("(v)", a1, a2), law_pq(simp(p, q), Cmp::Leq, A(ops[a1], simp(p, A(ops[a2], q)))));
  }
  for (auto a : kPF) {
    for (auto b : kHG) add(tag("(vi)", a, b), law_pq(sand(A(ops[b], simp(p, q)), p), Cmp::Leq, A(ops[a], q)));
  }
  for (auto a : kPF) {
    for (auto b : kHG) add(tag("(vii)", a, b), law_pq(simp(p, A(ops[b], q)), Cmp::Leq, A(ops[a], simp(p, q))));
  }
  for (auto b1 : kHG) {
    for (auto b2 : kHG) {
      add(tag("(viii)", b1, b2), law_pq(sand(A(ops[b1], simp(p, A(ops[b2], q))), p), Cmp::Leq, q));
    }
  }
}

void append(VerifyReport& r, const VerifyReport& part, const std::string& prefix) {
  for (auto c : part.checks) {
    c.name = prefix + " " + c.name;
    r.checks.push_back(std::move(c));
  }
}

void suite_cor1(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  const auto ops = given_ops(in);
  append(r, check_star_inequalities(L, ops, in.quant), "R3:");
  append(r, check_star_inequalities_R1(L, ops.P, ops.F, in.quant), "R1:");
  append(r, check_star_inequalities_R2(L, ops.H, ops.G, in.quant), "R2:");
}

void suite_roundtrip(VerifyReport& r, const Oml& L, const SuiteInstance& in) {
  r.checks = roundtrip_frame(L, *in.frame, in.quant).checks;
}

void suite_ext(VerifyReport& r, const Oml& L, const SuiteInstance& in, bool pf) {
  const auto ops = given_ops(in);
  r.checks = (pf ? check_extension_PF(L, in.points, ops.P, ops.F, in.quant)
                 : check_extension_HG(L, in.points, ops.H, ops.G, in.quant))
                 .checks;
}

}  // namespace

std::string_view to_string(SuiteId id) { return kSuiteNames[static_cast<std::size_t>(id)]; }

std::optional<SuiteId> parse_suite(std::string_view name) {
  for (auto id : kAllSuites) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

SuiteInstance SuiteInstance::of_frame(TimeFrame f, Quantifier quant) {
  SuiteInstance in;
  in.points = f.points();
  in.frame = std::move(f);
  in.quant = quant;
  return in;
}

SuiteInstance SuiteInstance::of_ops(TimeSet points, OperatorQuadruple ops, Quantifier quant) {
  if (ops.points() != points.size()) throw Error(ErrorKind::Incompatible, "operators do not match the time set");
  SuiteInstance in;
  in.points = std::move(points);
  in.ops = std::move(ops);
  in.quant = quant;
  return in;
}

VerifyReport run_suite(SuiteId id, const Oml& L, const SuiteInstance& in) {
  VerifyReport r;
  r.suite = std::string(to_string(id));
  r.instance = describe(L, in);
  if (in.frame && in.frame->size() != in.points.size()) {
    throw Error(ErrorKind::Incompatible, "frame does not match the time set");
  }
  if (auto reason = missing(L, in, id)) {
    r.checks.push_back(skipped(r.suite, *reason));
    return r;
  }
  try {
    switch (id) {
      case SuiteId::Thm1: suite_thm1(r, L, in); break;
      case SuiteId::Thm2: suite_thm2(r, L, in); break;
      case SuiteId::Thm3: suite_thm3(r, L, in); break;
      case SuiteId::Prop1: suite_prop1(r, L, in); break;
      case SuiteId::Lemma1: suite_lemma1(r, L, in); break;
      case SuiteId::Thm6: suite_thm6(r, L, in); break;
      case SuiteId::Thm7: suite_thm7(r, L, in); break;
      case SuiteId::Thm4Roundtrip: suite_roundtrip(r, L, in); break;
      case SuiteId::Cor1: suite_cor1(r, L, in); break;
      case SuiteId::ExtPf: suite_ext(r, L, in, true); break;
      case SuiteId::ExtHg: suite_ext(r, L, in, false); break;
      case SuiteId::DeMorgan: suite_demorgan(r, L, in); break;
      case SuiteId::OmlLaw: suite_oml_law(r, L, in); break;
    }
  } catch (const Error& e) {
    // Suites that need every proposition refuse to sample.
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    r.checks.clear();
    r.checks.push_back(skipped(r.suite, std::string("needs exhaustive enumeration: ") + e.what()));
  }
  return r;
}

VerifyReport check_thm6_equivalence(const Oml& L, const TimeSet& points, const TenseOperator& op,
                                    const Quantifier& quant) {
  if (!is_orthomodular(L)) throw Error(ErrorKind::PreconditionUnmet, "requires an orthomodular lattice");
  if (op.points() != points.size()) throw Error(ErrorKind::Incompatible, "operator does not match the time set");
  VerifyReport r;
  r.suite = "thm6";
  r.instance = "lattice=" + L.name() + " op=" + op.label() + " |T|=" + std::to_string(points.size());
  LawContext ctx(L, points, quant);
  const auto [l1, l2] = thm6_laws(op);
  r.checks.push_back(agreement(op.label() + ": (i) <=> (ii)", check_law(ctx, l1), check_law(ctx, l2)));
  return r;
}

std::vector<std::string> replay_witness(const Oml& L, const VerifyReport& report) {
  const auto* failure = report.first_failure();
  if (!failure) throw Error(ErrorKind::NotAFailure, "report '" + report.suite + "' has no failing check");
  std::vector<std::string> lines{"check " + failure->name};
  if (!failure->statement.empty()) lines.push_back("statement " + failure->statement);
  if (failure->witness && failure->witness->replay) {
    auto trace = failure->witness->replay(L);
    lines.insert(lines.end(), trace.begin(), trace.end());
  } else if (failure->witness) {
    lines.push_back("witness " + failure->witness->summary());
  } else {
    lines.push_back("detail " + failure->detail);
  }
  return lines;
}

}  // namespace omt
