#include "omt/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "omt/error.hpp"

namespace omt {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    auto raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, std::string_view token, const std::string& message) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line.number) + ", token '" + std::string(token) + "': " + message);
}

[[noreturn]] void fail(const Line& line, const std::string& message) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line.number) + ": " + message);
}

std::pair<std::string, std::string> split(const Line& line, const std::string& token, char sep) {
  const auto at = token.find(sep);
  if (at == std::string::npos || at == 0 || at + 1 == token.size() || token.find(sep, at + 1) != std::string::npos) {
    fail(line, token, std::string("expected <a>") + sep + "<b>");
  }
  return {token.substr(0, at), token.substr(at + 1)};
}

std::string header_name(const Line& line, std::optional<std::string>& slot) {
  if (line.tokens.size() != 2) fail(line, line.tokens[0], "expected exactly one name");
  if (slot) fail(line, line.tokens[0], "repeated header");
  slot = line.tokens[1];
  return *slot;
}

std::vector<Element> parse_values(const Line& line, const std::string& token, const Oml& L) {
  std::vector<Element> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = token.find(',', pos);
    const auto part = token.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto e = L.find(part);
    if (!e) fail(line, token, "unknown element '" + part + "'");
    out.push_back(*e);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += " " + n;
  return s;
}

}  // namespace

LatticeSpec parse_lattice(std::string_view text) {
  LatticeSpec spec;
  std::optional<std::string> name;
  for (const auto& line : tokenize(text)) {
    const auto& key = line.tokens[0];
    if (key == "lattice") {
      spec.name = header_name(line, name);
    } else if (key == "elements") {
      spec.elements.insert(spec.elements.end(), line.tokens.begin() + 1, line.tokens.end());
    } else if (key == "covers") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) spec.covers.push_back(split(line, line.tokens[i], '<'));
    } else if (key == "ortho") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) spec.ortho.push_back(split(line, line.tokens[i], ':'));
    } else {
      fail(line, key, "unknown keyword");
    }
  }
  if (!name) throw Error(ErrorKind::ParseError, "missing 'lattice <name>' line");
  if (spec.elements.empty()) throw Error(ErrorKind::ParseError, "missing 'elements' line");
  return spec;
}

std::string format_lattice(const LatticeSpec& spec) {
  std::string out = "lattice " + spec.name + "\nelements" + join_names(spec.elements) + "\n";
  if (!spec.covers.empty()) {
    out += "covers";
    for (const auto& [lo, hi] : spec.covers) out += " " + lo + "<" + hi;
    out += "\n";
  }
  if (!spec.ortho.empty()) {
    out += "ortho";
    for (const auto& [a, b] : spec.ortho) out += " " + a + ":" + b;
    out += "\n";
  }
  return out;
}

TimeFrame parse_frame(std::string_view text) {
  std::optional<std::string> name;
  std::vector<std::string> names;
  std::vector<std::pair<Line, std::pair<std::string, std::string>>> pairs;
  for (const auto& line : tokenize(text)) {
    const auto& key = line.tokens[0];
    if (key == "frame") {
      header_name(line, name);
    } else if (key == "points") {
      names.insert(names.end(), line.tokens.begin() + 1, line.tokens.end());
    } else if (key == "rel") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) pairs.emplace_back(line, split(line, line.tokens[i], '>'));
    } else {
      fail(line, key, "unknown keyword");
    }
  }
  if (!name) throw Error(ErrorKind::ParseError, "missing 'frame <name>' line");
  if (names.empty()) throw Error(ErrorKind::ParseError, "missing 'points' line");
  TimeSet points(std::move(names));
  Relation rel(points.size());
  for (const auto& [line, st] : pairs) {
    const auto s = points.find(st.first), t = points.find(st.second);
    if (!s || !t) fail(line, st.first + ">" + st.second, "unknown time point");
    rel.insert(*s, *t);
  }
  return TimeFrame(*name, std::move(points), std::move(rel));
}

std::string format_relation(const std::string& name, const TimeSet& points, const Relation& rel) {
  std::string out = "frame " + name + "\npoints" + join_names(points.names()) + "\nrel";
  for (auto [s, t] : rel.pairs()) out += " " + points.name(s) + ">" + points.name(t);
  return out + "\n";
}

std::string format_frame(const TimeFrame& f) { return format_relation(f.name(), f.points(), f.relation()); }

std::vector<NamedProposition> parse_propositions(std::string_view text, const Oml& L, const TimeSet& points) {
  std::vector<NamedProposition> out;
  for (const auto& line : tokenize(text)) {
    if (line.tokens[0] != "prop") fail(line, line.tokens[0], "unknown keyword");
    if (line.tokens.size() < 3 || line.tokens[2] != "=") fail(line, "expected 'prop <name> = <t>:<e> ...'");
    for (const auto& p : out) {
      if (p.name == line.tokens[1]) fail(line, line.tokens[1], "duplicate proposition");
    }
    std::vector<std::optional<Element>> values(points.size());
    for (std::size_t i = 3; i < line.tokens.size(); ++i) {
      const auto [t, e] = split(line, line.tokens[i], ':');
      const auto tp = points.find(t);
      if (!tp) fail(line, line.tokens[i], "unknown time point '" + t + "'");
      const auto el = L.find(e);
      if (!el) fail(line, line.tokens[i], "unknown element '" + e + "'");
      if (values[tp->index]) fail(line, line.tokens[i], "time point given twice");
      values[tp->index] = *el;
    }
    std::vector<Element> v;
    for (std::size_t t = 0; t < values.size(); ++t) {
      if (!values[t]) fail(line, line.tokens[1], "no value at time point '" + points.names()[t] + "'");
      v.push_back(*values[t]);
    }
    out.push_back({line.tokens[1], Proposition(std::move(v))});
  }
  return out;
}

std::string format_propositions(const std::vector<NamedProposition>& props, const Oml& L, const TimeSet& points) {
  std::string out;
  for (const auto& p : props) {
    if (p.value.size() != points.size()) throw Error(ErrorKind::Incompatible, "proposition does not match time set");
    out += "prop " + p.name + " =";
    for (std::size_t t = 0; t < points.size(); ++t) out += " " + points.names()[t] + ":" + L.element_name(p.value[t]);
    out += "\n";
  }
  return out;
}

OperatorFile parse_operators(std::string_view text, const Oml& L) {
  struct Def {
    std::optional<Line> first;
    std::optional<std::pair<std::vector<std::string>, Element>> rule;
    std::vector<std::pair<Proposition, Proposition>> map;
  };
  std::optional<std::string> name;
  std::optional<TimeSet> points;
  std::map<char, Def> defs;
  const std::string kinds = "PFHG";
  for (const auto& line : tokenize(text)) {
    const auto& key = line.tokens[0];
    if (key == "tense-ops") {
      header_name(line, name);
      continue;
    }
    if (key == "points") {
      if (points) fail(line, key, "repeated header");
      points = TimeSet(std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end()));
      continue;
    }
    if (key.size() != 1 || kinds.find(key[0]) == std::string::npos) fail(line, key, "unknown keyword");
    if (!points) fail(line, key, "'points' must come first");
    if (line.tokens.size() < 2) fail(line, key, "expected 'rule' or 'map'");
    auto& def = defs[key[0]];
    if (!def.first) def.first = line;
    const auto& form = line.tokens[1];
    if (form == "rule") {
      if (def.rule || !def.map.empty()) fail(line, key, "operator defined twice");
      if (line.tokens.size() < 4 || line.tokens[line.tokens.size() - 2] != "else") {
        fail(line, form, "expected '<op> rule <t> ... else <e>'");
      }
      const auto fallback = L.find(line.tokens.back());
      if (!fallback) fail(line, line.tokens.back(), "unknown element");
      std::vector<std::string> special(line.tokens.begin() + 2, line.tokens.end() - 2);
      for (const auto& t : special) {
        if (!points->find(t)) fail(line, t, "unknown time point");
      }
      def.rule.emplace(std::move(special), *fallback);
    } else if (form == "map") {
      if (def.rule) fail(line, key, "operator defined twice");
      if (line.tokens.size() != 5 || line.tokens[3] != "->") fail(line, form, "expected '<op> map <values> -> <values>'");
      auto in = parse_values(line, line.tokens[2], L);
      auto out = parse_values(line, line.tokens[4], L);
      if (in.size() != points->size() || out.size() != points->size()) {
        fail(line, line.tokens[2], "expected one value per time point");
      }
      def.map.emplace_back(Proposition(std::move(in)), Proposition(std::move(out)));
    } else {
      fail(line, form, "expected 'rule' or 'map'");
    }
  }
  if (!name) throw Error(ErrorKind::ParseError, "missing 'tense-ops <name>' line");
  if (!points) throw Error(ErrorKind::ParseError, "missing 'points' line");

  std::vector<TenseOperator> ops;
  for (char k : kinds) {
    const auto it = defs.find(k);
    if (it == defs.end()) throw Error(ErrorKind::ParseError, std::string("operator ") + k + " is not defined");
    const auto& def = it->second;
    const std::string label(1, k);
    if (def.rule) {
      std::vector<TimePoint> special;
      for (const auto& t : def.rule->first) special.push_back(points->point(t));
      const auto shape = (k == 'P' || k == 'F') ? Shape::JoinLike : Shape::MeetLike;
      ops.push_back(TenseOperator::identity_else_constant(points->size(), special, def.rule->second, shape, label));
    } else {
      ops.push_back(TenseOperator::tabulated(points->size(), def.map, label));
    }
  }
  return OperatorFile{*name, *points, OperatorQuadruple{ops[0], ops[1], ops[2], ops[3]}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace omt
