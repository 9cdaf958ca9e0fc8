#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "omt/lattice.hpp"
#include "omt/proposition.hpp"
#include "omt/tense.hpp"
#include "omt/timeframe.hpp"

namespace omt {

/// Line-based text formats. Tokens are whitespace separated and '#' starts
/// a comment. Errors are Error(ParseError) naming the line and token.
///
///   lattice <name>
///   elements <e> <e> ...
///   covers <lo><<hi> ...
///   ortho <x>:<x'> ...
LatticeSpec parse_lattice(std::string_view text);
std::string format_lattice(const LatticeSpec& spec);

///   frame <name>
///   points <t> <t> ...
///   rel <s>><t> ...        # s before t
TimeFrame parse_frame(std::string_view text);
std::string format_frame(const TimeFrame& f);
/// Same format for a possibly empty relation.
std::string format_relation(const std::string& name, const TimeSet& points, const Relation& rel);

struct NamedProposition {
  std::string name;
  Proposition value;
};

///   prop <name> = <t>:<e> <t>:<e> ...   (every point exactly once)
std::vector<NamedProposition> parse_propositions(std::string_view text, const Oml& L, const TimeSet& points);
std::string format_propositions(const std::vector<NamedProposition>& props, const Oml& L, const TimeSet& points);

struct OperatorFile {
  std::string name;
  TimeSet points;
  OperatorQuadruple ops;
};

///   tense-ops <name>
///   points <t> <t> ...
///   P rule <t> <t> ... else <e>          # q(t) on the listed points, <e> elsewhere
///   P map <e>,<e>,... -> <e>,<e>,...     # one tabulated entry per line
/// Each of P, F, H and G is defined by rule or by map lines, not both.
OperatorFile parse_operators(std::string_view text, const Oml& L);

/// Reads a whole file; Error(ParseError) when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace omt
