#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "omt/proposition.hpp"
#include "omt/tense.hpp"
#include "omt/timeframe.hpp"

namespace omt {

class Oml;

struct TableRow {
  std::string label;
  std::vector<std::string> cells;
};

/// Time points as columns, one row per proposition.
struct Table {
  std::string corner = "t";
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

/// Aligned columns separated by " | ", a rule under the header and no
/// trailing whitespace.
std::string render_table(const Table& table);

TableRow value_row(const Oml& L, std::string label, const Proposition& q);

/// Rows q(t), then A(q)(t) for each operator.
Table operator_table(const Oml& L, const TimeSet& points, const std::string& name, const Proposition& q,
                     const std::vector<TenseOperator>& ops);

/// The full x*y and x->y operation tables (rows x, columns y).
std::string render_sasaki_tables(const Oml& L);

std::vector<std::string> demo_names();
/// Throws Error(UnknownDemo).
std::string render_demo(std::string_view name);

}  // namespace omt
