#include "omt/fixtures.hpp"

#include "omt/error.hpp"

namespace omt::fixtures {

LatticeSpec chain2_spec() { return {"chain2", {"0", "1"}, {{"0", "1"}}, {{"0", "1"}}}; }

LatticeSpec boolean2_spec() {
  return {"boolean2",
          {"0", "a", "a'", "1"},
          {{"0", "a"}, {"0", "a'"}, {"a", "1"}, {"a'", "1"}},
          {{"0", "1"}, {"a", "a'"}}};
}

LatticeSpec boolean3_spec() {
  return {"boolean3",
          {"0", "a", "b", "c", "c'", "b'", "a'", "1"},
          {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "c'"}, {"b", "c'"}, {"a", "b'"}, {"c", "b'"}, {"b", "a'"},
           {"c", "a'"}, {"c'", "1"}, {"b'", "1"}, {"a'", "1"}},
          {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}}};
}

LatticeSpec mo2_spec() {
  return {"mo2",
          {"0", "a", "a'", "b", "b'", "1"},
          {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"}, {"a", "1"}, {"a'", "1"}, {"b", "1"}, {"b'", "1"}},
          {{"0", "1"}, {"a", "a'"}, {"b", "b'"}}};
}

LatticeSpec fig1_spec() {
  return {"fig1",
          {"0", "a", "b", "c", "d", "c'", "b'", "a'", "d'", "1"},
          {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"}, {"0", "d'"}, {"a", "b'"}, {"a", "c'"}, {"b", "a'"},
           {"b", "c'"}, {"c", "a'"}, {"c", "b'"}, {"a'", "1"}, {"b'", "1"}, {"c'", "1"}, {"d", "1"}, {"d'", "1"}},
          {{"0", "1"}, {"a", "a'"}, {"b", "b'"}, {"c", "c'"}, {"d", "d'"}}};
}

LatticeSpec o6_spec() {
  return {"o6",
          {"0", "x", "y", "y'", "x'", "1"},
          {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "y'"}, {"y'", "x'"}, {"x'", "1"}},
          {{"0", "1"}, {"x", "x'"}, {"y", "y'"}}};
}

std::vector<std::string> lattice_names() { return {"chain2", "boolean2", "boolean3", "mo2", "fig1", "o6"}; }

LatticeSpec lattice_spec(std::string_view name) {
  if (name == "chain2") return chain2_spec();
  if (name == "boolean2") return boolean2_spec();
  if (name == "boolean3") return boolean3_spec();
  if (name == "mo2") return mo2_spec();
  if (name == "fig1") return fig1_spec();
  if (name == "o6") return o6_spec();
  throw Error(ErrorKind::InvalidSpec, "unknown built-in lattice '" + std::string(name) + "'");
}

Oml lattice(std::string_view name) { return Oml::build(lattice_spec(name)); }

namespace {

Proposition named(const Oml& L, std::initializer_list<const char*> names) {
  std::vector<Element> v;
  for (const char* n : names) v.push_back(L.element(n));
  return Proposition(std::move(v));
}

}  // namespace

Proposition example_p(const Oml& fig1) { return named(fig1, {"c'", "b'", "c'", "a'", "b'"}); }
Proposition example_q(const Oml& fig1) { return named(fig1, {"a", "b'", "d", "a", "a'"}); }

OperatorQuadruple rule_quadruple(const Oml& L, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidSpec, "the rule quadruple needs at least two time points");
  const std::vector<TimePoint> first{TimePoint{0}}, second{TimePoint{1}};
  return OperatorQuadruple{
      TenseOperator::identity_else_constant(n, second, L.top(), Shape::JoinLike, "P"),
      TenseOperator::identity_else_constant(n, first, L.top(), Shape::JoinLike, "F"),
      TenseOperator::identity_else_constant(n, first, L.bottom(), Shape::MeetLike, "H"),
      TenseOperator::identity_else_constant(n, second, L.bottom(), Shape::MeetLike, "G"),
  };
}

}  // namespace omt::fixtures
