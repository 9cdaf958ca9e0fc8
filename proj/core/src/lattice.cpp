#include "omt/lattice.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "omt/error.hpp"

namespace omt {
namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::uint32_t lookup(const std::unordered_map<std::string, std::uint32_t>& index, const std::string& name,
                     std::string_view where) {
  auto it = index.find(name);
  if (it == index.end()) {
    throw Error(ErrorKind::InvalidSpec, "unknown element '" + name + "' in " + std::string(where));
  }
  return it->second;
}

}  // namespace

Oml Oml::build(const LatticeSpec& spec, BuildOptions options) {
  Oml L;
  L.name_ = spec.name;
  const std::size_t n = spec.elements.size();
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "lattice '" + spec.name + "' has no elements");

  L.names_ = spec.elements;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (L.names_[i].empty()) throw Error(ErrorKind::InvalidSpec, "empty element name");
    if (!L.index_.emplace(L.names_[i], i).second) {
      throw Error(ErrorKind::InvalidSpec, "duplicate element name '" + L.names_[i] + "'");
    }
  }

  std::vector<std::vector<std::uint32_t>> upper(n);
  std::vector<std::uint32_t> indegree(n, 0);
  for (const auto& [lo, hi] : spec.covers) {
    const auto a = lookup(L.index_, lo, "covers");
    const auto b = lookup(L.index_, hi, "covers");
    if (a == b) throw Error(ErrorKind::CycleInCovers, "cover " + lo + "<" + hi + " is a loop");
    upper[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm, smallest index first, gives a stable linear extension.
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::uint32_t> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    const auto x = ready.top();
    ready.pop();
    topo.push_back(x);
    for (auto y : upper[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (topo.size() != n) {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (indegree[i] != 0) {
        throw Error(ErrorKind::CycleInCovers, "covers contain a cycle through '" + L.names_[i] + "'");
      }
    }
  }

  L.leq_ = BitMatrix(n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    L.leq_.set(*it, *it);
    for (auto y : upper[*it]) L.leq_.or_row(*it, y);
  }

  L.linear_.reserve(n);
  L.rank_.assign(n, 0);
  for (std::uint32_t r = 0; r < n; ++r) {
    L.linear_.push_back(Element{topo[r]});
    L.rank_[topo[r]] = r;
  }

  const auto leq = [&](std::uint32_t x, std::uint32_t y) { return L.leq_.test(x, y); };

  // A bottom is first in every linear extension, a top last.
  const auto lo = topo.front();
  const auto hi = topo.back();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!leq(lo, i)) throw Error(ErrorKind::NotBounded, "no least element");
    if (!leq(i, hi)) throw Error(ErrorKind::NotBounded, "no greatest element");
  }
  L.bottom_ = Element{lo};
  L.top_ = Element{hi};

  L.join_.assign(n * n, kUnset);
  L.meet_.assign(n * n, kUnset);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x; y < n; ++y) {
      // The least upper bound, if it exists, comes first among upper bounds
      // in the linear extension; the greatest lower bound comes last.
      std::uint32_t j = kUnset;
      for (auto z : topo) {
        if (leq(x, z) && leq(y, z)) {
          j = z;
          break;
        }
      }
      for (std::uint32_t w = 0; w < n; ++w) {
        if (leq(x, w) && leq(y, w) && !leq(j, w)) {
          throw Error(ErrorKind::NotALattice,
                      "'" + L.names_[x] + "' and '" + L.names_[y] + "' have no least upper bound");
        }
      }
      std::uint32_t m = kUnset;
      for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        if (leq(*it, x) && leq(*it, y)) {
          m = *it;
          break;
        }
      }
      for (std::uint32_t w = 0; w < n; ++w) {
        if (leq(w, x) && leq(w, y) && !leq(w, m)) {
          throw Error(ErrorKind::NotALattice,
                      "'" + L.names_[x] + "' and '" + L.names_[y] + "' have no greatest lower bound");
        }
      }
      L.join_[x * n + y] = L.join_[y * n + x] = j;
      L.meet_[x * n + y] = L.meet_[y * n + x] = m;
    }
  }

  if (!spec.ortho.empty()) {
    std::vector<std::uint32_t> comp(n, kUnset);
    const auto assign = [&](std::uint32_t a, std::uint32_t b) {
      if (comp[a] != kUnset && comp[a] != b) {
        throw Error(ErrorKind::OrthoViolation, "conflicting complements for '" + L.names_[a] + "'");
      }
      comp[a] = b;
    };
    for (const auto& [x, y] : spec.ortho) {
      const auto a = lookup(L.index_, x, "ortho");
      const auto b = lookup(L.index_, y, "ortho");
      assign(a, b);
      assign(b, a);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (comp[i] == kUnset) throw Error(ErrorKind::OrthoViolation, "no complement given for '" + L.names_[i] + "'");
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      if (L.join_[x * n + comp[x]] != hi || L.meet_[x * n + comp[x]] != lo) {
        throw Error(ErrorKind::OrthoViolation, "'" + L.names_[comp[x]] + "' is not a complement of '" + L.names_[x] + "'");
      }
      for (std::uint32_t y = 0; y < n; ++y) {
        if (leq(x, y) && !leq(comp[y], comp[x])) {
          throw Error(ErrorKind::OrthoViolation, "complementation is not antitone at '" + L.names_[x] + "' <= '" +
                                                     L.names_[y] + "'");
        }
      }
    }
    L.comp_ = std::move(comp);
  }

  if (options.require_orthomodular) {
    if (!L.has_ortho()) throw Error(ErrorKind::NoOrtho, "orthomodularity requested for a lattice without ortho pairs");
    auto report = check_orthomodular(L);
    if (report.failed()) {
      throw Error(ErrorKind::OrthoViolation, "orthomodular law fails: " + report.first_failure()->witness->summary());
    }
  }
  return L;
}

Element Oml::complement(Element x) const {
  if (comp_.empty()) throw Error(ErrorKind::NoOrtho, "lattice '" + name_ + "' has no orthocomplementation");
  return Element{comp_[x.index]};
}

Element Oml::join_set(std::span<const Element> elems) const noexcept {
  Element acc = bottom_;
  for (auto e : elems) acc = join(acc, e);
  return acc;
}

Element Oml::meet_set(std::span<const Element> elems) const noexcept {
  Element acc = top_;
  for (auto e : elems) acc = meet(acc, e);
  return acc;
}

std::optional<Element> Oml::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return Element{it->second};
}

Element Oml::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::UnknownElement, "'" + std::string(name) + "' is not an element of '" + name_ + "'");
}

std::vector<Element> Oml::elements() const {
  std::vector<Element> out(size());
  for (std::uint32_t i = 0; i < size(); ++i) out[i] = Element{i};
  return out;
}

LatticeSpec Oml::spec() const {
  LatticeSpec s;
  s.name = name_;
  s.elements = names_;
  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (x == y || !leq_.test(x, y)) continue;
      bool cover = true;
      for (std::uint32_t z = 0; z < n && cover; ++z) {
        if (z != x && z != y && leq_.test(x, z) && leq_.test(z, y)) cover = false;
      }
      if (cover) s.covers.emplace_back(names_[x], names_[y]);
    }
  }
  for (std::uint32_t x = 0; x < comp_.size(); ++x) {
    if (x <= comp_[x]) s.ortho.emplace_back(names_[x], names_[comp_[x]]);
  }
  return s;
}

Oml build_lattice(const LatticeSpec& spec, BuildOptions options) { return Oml::build(spec, options); }

VerifyReport check_orthomodular(const Oml& L) {
  VerifyReport report;
  report.suite = "orthomodular";
  report.instance = "lattice=" + L.name();
  CheckResult check;
  check.name = "x <= y => y = x v (y ^ x')";
  const auto n = static_cast<std::uint32_t>(L.size());
  check.cases = std::uint64_t{n} * n;
  if (!L.has_ortho()) {
    check.verdict = Verdict::Skipped;
    check.detail = "requires orthocomplementation";
    report.checks.push_back(std::move(check));
    return report;
  }
  for (std::uint32_t i = 0; i < n && !check.witness; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const Element x{i}, y{j};
      if (!L.leq(x, y)) continue;
      const Element rhs = L.join(x, L.meet(y, L.complement(x)));
      if (rhs == y) continue;
      check.verdict = Verdict::Fail;
      Witness w;
      w.fields = {{"x", L.element_name(x)},
                  {"y", L.element_name(y)},
                  {"x v (y ^ x')", L.element_name(rhs)}};
      w.replay = [x, y](const Oml& M) {
        const auto xc = M.complement(x);
        const auto inner = M.meet(y, xc);
        const auto rhs2 = M.join(x, inner);
        std::vector<std::string> lines;
        lines.push_back("x = " + M.element_name(x));
        lines.push_back("y = " + M.element_name(y));
        lines.push_back("x <= y: " + std::string(M.leq(x, y) ? "true" : "false"));
        lines.push_back("x' = " + M.element_name(xc));
        lines.push_back("y ^ x' = " + M.element_name(inner));
        lines.push_back("x v (y ^ x') = " + M.element_name(rhs2));
        lines.push_back(M.element_name(rhs2) + (rhs2 == y ? " = " : " != ") + M.element_name(y));
        return lines;
      };
      check.witness = std::move(w);
      break;
    }
  }
  report.checks.push_back(std::move(check));
  return report;
}

}  // namespace omt
