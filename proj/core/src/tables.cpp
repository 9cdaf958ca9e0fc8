#include "omt/tables.hpp"

#include <algorithm>

#include "omt/error.hpp"
#include "omt/extension.hpp"
#include "omt/fixtures.hpp"
#include "omt/induction.hpp"
#include "omt/io.hpp"
#include "omt/lattice.hpp"
#include "omt/sasaki.hpp"

namespace omt {
namespace {

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); }

std::string frame_description(const TimeFrame& f) {
  std::string s = "({";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f.points().names()[i];
  return s + "}, <=)";
}

std::string strict_points(const Oml& L, const TimeSet& points, const Proposition& lo, const Proposition& hi) {
  std::string s;
  for (std::uint32_t t = 0; t < lo.size(); ++t) {
    if (lo[t] != hi[t] && L.leq(lo[t], hi[t])) s += " " + points.name(TimePoint{t});
  }
  return s.empty() ? " none" : s;
}

std::string demo_example1() {
  const auto L = fixtures::lattice("fig1");
  const auto f = fixtures::le(5);
  const auto ops = OperatorQuadruple::induced_by(f.relation());
  const std::vector<TenseOperator> list{ops.P, ops.F, ops.H, ops.G};
  std::string out = "lattice fig1, frame " + frame_description(f) + "\n\n";
  out += render_table(operator_table(L, f.points(), "p", fixtures::example_p(L), list));
  out += "\n";
  out += render_table(operator_table(L, f.points(), "q", fixtures::example_q(L), list));
  return out;
}

std::string demo_example1_pg() {
  const auto L = fixtures::lattice("fig1");
  const auto f = fixtures::le(5);
  const auto ops = OperatorQuadruple::induced_by(f.relation());
  const auto PG = compose(ops.P, ops.G), GP = compose(ops.G, ops.P);
  std::string out = "lattice fig1, frame " + frame_description(f) + "\n";
  for (const auto& [name, q] : {std::pair{"p", fixtures::example_p(L)}, std::pair{"q", fixtures::example_q(L)}}) {
    const auto lo = PG.apply(L, q), hi = GP.apply(L, q);
    out += "\n" + render_table(operator_table(L, f.points(), name, q, {PG, GP}));
    const std::string n(name);
    out += "PG(" + n + ") <= " + n + ": " + (prop_leq(L, lo, q) ? "holds" : "fails") + ", strict at t =" +
           strict_points(L, f.points(), lo, q) + "\n";
    out += n + " <= GP(" + n + "): " + (prop_leq(L, q, hi) ? "holds" : "fails") + ", strict at t =" +
           strict_points(L, f.points(), q, hi) + "\n";
  }
  return out;
}

std::string demo_example2() {
  const auto L = fixtures::lattice("fig1");
  const auto points = TimeSet::numbered(5);
  const auto ops = fixtures::rule_quadruple(L, 5);
  Quantifier exact;
  exact.over_budget = OverBudget::Throw;
  const auto r3 = induce_R3(L, ops, exact);
  const auto star = OperatorQuadruple::induced_by(r3.relation, "*");
  const auto p = fixtures::example_p(L);

  std::string out = "lattice fig1, |T| = 5\n";
  out += "P(q)(t) = q(t) if t = 2, 1 otherwise\n";
  out += "F(q)(t) = q(t) if t = 1, 1 otherwise\n";
  out += "H(q)(t) = q(t) if t = 1, 0 otherwise\n";
  out += "G(q)(t) = q(t) if t = 2, 0 otherwise\n\n";
  out += "induced relation (" + std::to_string(r3.cases) + " propositions, exhaustive):\n";
  out += format_relation("R3", points, r3.relation);
  out += "\n" + render_table(operator_table(L, points, "p", p, {ops.P, ops.F, star.P, star.F}));
  for (auto k : kAllTenses) {
    const auto cmp = op_eq(L, star[k], ops[k], exact);
    out += star[k].label() + (cmp.holds ? " = " : " != ") + ops[k].label() + "\n";
  }
  const auto verdict = classify_inducibility(L, ops, exact);
  if (verdict.frame_induced) {
    out += "induced by the frame (T, R3)\n";
  } else {
    const auto& w = *verdict.witness;
    const std::string k(1, to_char(w.op));
    out += "not induced by any time frame: at q = " + format_values(L, w.q) + ", " + k + "*(q)(" +
           points.name(w.s) + ") = " + L.element_name(w.induced) + " but " + k + "(q)(" + points.name(w.s) +
           ") = " + L.element_name(w.given) + "\n";
  }
  return out;
}

std::string demo_example_final() {
  const auto L = fixtures::lattice("fig1");
  const auto f = fixtures::le(5);
  const auto ops = OperatorQuadruple::induced_by(f.relation());
  Quantifier exact;
  exact.over_budget = OverBudget::Throw;
  const auto r1 = induce_R1(L, ops.P, ops.F, exact);
  const auto ef = extend_relation(f.points(), r1.relation, "bar");
  const auto Pbar = TenseOperator::frame_induced(ef.bar, TenseKind::P);
  const auto Fbar = TenseOperator::frame_induced(ef.bar, TenseKind::F);
  const auto p = fixtures::example_p(L);
  const auto pbar = extend_prop_PF(L, p, ops.P, ops.F, ef);

  Table table;
  table.corner = "tbar";
  table.columns = ef.bar.points().names();
  const std::size_t n = f.size();
  const auto middle = [&](std::string label, const Proposition& q) {
    TableRow row{std::move(label), std::vector<std::string>(3 * n)};
    for (std::size_t t = 0; t < n; ++t) row.cells[n + t] = L.element_name(q[t]);
    return row;
  };
  table.rows.push_back(middle("p(t)", p));
  table.rows.push_back(middle("P(p)(t)", ops.P.apply(L, p)));
  table.rows.push_back(middle("F(p)(t)", ops.F.apply(L, p)));
  table.rows.push_back(value_row(L, "pbar(tbar)", pbar));
  table.rows.push_back(value_row(L, "Pbar(pbar)(tbar)", Pbar.apply(L, pbar)));
  table.rows.push_back(value_row(L, "Fbar(pbar)(tbar)", Fbar.apply(L, pbar)));

  std::string out = "lattice fig1, frame " + frame_description(f) + ", R induced by P and F\n";
  out += format_relation("Rbar", ef.bar.points(), ef.bar.relation());
  out += "\n" + render_table(table);
  const bool restricted = ef.bar.relation().restrict(ef.base_span()) == r1.relation;
  out += std::string("Rbar|T = R: ") + (restricted ? "yes" : "no") + "\n";
  out += std::string("Pbar(pbar)|T = P(p): ") +
         (restrict_to_base(Pbar.apply(L, pbar), ef) == ops.P.apply(L, p) ? "yes" : "no") + "\n";
  out += std::string("Fbar(pbar)|T = F(p): ") +
         (restrict_to_base(Fbar.apply(L, pbar), ef) == ops.F.apply(L, p) ? "yes" : "no") + "\n";
  return out;
}

}  // namespace

std::string render_table(const Table& table) {
  std::vector<std::size_t> width(table.columns.size() + 1, 0);
  width[0] = table.corner.size();
  for (std::size_t c = 0; c < table.columns.size(); ++c) width[c + 1] = table.columns[c].size();
  for (const auto& row : table.rows) {
    if (row.cells.size() != table.columns.size()) throw Error(ErrorKind::Incompatible, "ragged table row");
    width[0] = std::max(width[0], row.label.size());
    for (std::size_t c = 0; c < row.cells.size(); ++c) width[c + 1] = std::max(width[c + 1], row.cells[c].size());
  }
  const auto line = [&](const std::string& label, const std::vector<std::string>& cells) {
    std::string s = pad(label, width[0]);
    for (std::size_t c = 0; c < cells.size(); ++c) s += " | " + pad(cells[c], width[c + 1]);
    return rtrim(s) + "\n";
  };
  std::string out = line(table.corner, table.columns);
  std::string rule(width[0] + 1, '-');
  for (std::size_t c = 1; c < width.size(); ++c) rule += "+" + std::string(width[c] + 2, '-');
  out += rtrim(rule) + "\n";
  for (const auto& row : table.rows) out += line(row.label, row.cells);
  return out;
}

TableRow value_row(const Oml& L, std::string label, const Proposition& q) {
  TableRow row{std::move(label), {}};
  for (auto e : q.values()) row.cells.push_back(L.element_name(e));
  return row;
}

Table operator_table(const Oml& L, const TimeSet& points, const std::string& name, const Proposition& q,
                     const std::vector<TenseOperator>& ops) {
  if (q.size() != points.size()) throw Error(ErrorKind::Incompatible, "proposition does not match the time set");
  Table table;
  table.columns = points.names();
  table.rows.push_back(value_row(L, name + "(t)", q));
  for (const auto& op : ops) table.rows.push_back(value_row(L, op.label() + "(" + name + ")(t)", op.apply(L, q)));
  return table;
}

std::string render_sasaki_tables(const Oml& L) {
  std::string out;
  const auto elements = L.elements();
  for (const auto& [title, fn] : {std::pair<std::string, Element (*)(const Oml&, Element, Element)>{"x*y", sasaki_and},
                                  std::pair<std::string, Element (*)(const Oml&, Element, Element)>{"x->y", sasaki_imp}}) {
    Table table;
    table.corner = title;
    for (auto y : elements) table.columns.push_back(L.element_name(y));
    for (auto x : elements) {
      TableRow row{L.element_name(x), {}};
      for (auto y : elements) row.cells.push_back(L.element_name(fn(L, x, y)));
      table.rows.push_back(std::move(row));
    }
    if (!out.empty()) out += "\n";
    out += render_table(table);
  }
  return out;
}

std::vector<std::string> demo_names() { return {"example1", "example1-pg", "example2", "example-final"}; }

std::string render_demo(std::string_view name) {
  if (name == "example1") return demo_example1();
  if (name == "example1-pg") return demo_example1_pg();
  if (name == "example2") return demo_example2();
  if (name == "example-final") return demo_example_final();
  throw Error(ErrorKind::UnknownDemo, "unknown demo '" + std::string(name) + "'");
}

}  // namespace omt
