#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "omt/lattice.hpp"
#include "omt/proposition.hpp"
#include "omt/timeframe.hpp"
#include "oracle.hpp"

namespace omt {

// Readable gtest output: element indices per time point.
inline void PrintTo(const Proposition& q, std::ostream* os) {
  *os << "(";
  for (std::size_t t = 0; t < q.size(); ++t) *os << (t ? "," : "") << q[t].index;
  *os << ")";
}

inline void PrintTo(Element e, std::ostream* os) { *os << "#" << e.index; }

}  // namespace omt

namespace testing_helpers {

inline oracle::Values values_of(const omt::Proposition& q) {
  oracle::Values v;
  for (auto e : q.values()) v.push_back(static_cast<int>(e.index));
  return v;
}

inline omt::Proposition prop_of(const oracle::Values& v) {
  std::vector<omt::Element> out;
  for (int x : v) out.push_back(omt::Element{static_cast<std::uint32_t>(x)});
  return omt::Proposition(std::move(out));
}

inline omt::Proposition named(const omt::Oml& L, const std::vector<std::string>& names) {
  std::vector<omt::Element> out;
  for (const auto& n : names) out.push_back(L.element(n));
  return omt::Proposition(std::move(out));
}

inline oracle::Pairs pairs_of(const omt::Relation& r) {
  oracle::Pairs out;
  for (auto [s, t] : r.pairs()) out.insert({static_cast<int>(s.index), static_cast<int>(t.index)});
  return out;
}

inline omt::Relation relation_of(int n, const oracle::Pairs& pairs) {
  omt::Relation r(n);
  for (auto [s, t] : pairs) r.insert(omt::TimePoint{static_cast<std::uint32_t>(s)}, omt::TimePoint{static_cast<std::uint32_t>(t)});
  return r;
}

inline omt::TimeFrame frame_of(int n, const oracle::Pairs& pairs, std::string name = "rand") {
  return omt::TimeFrame(std::move(name), omt::TimeSet::numbered(n), relation_of(n, pairs));
}

}  // namespace testing_helpers
