#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "dagsim/errors.hpp"

namespace dagsim::experiments {

/// One output cell: absent, floating-point, integer, or text. Absent cells
/// serialize as an empty CSV field and a JSON null.
using Cell = std::variant<std::monostate, double, long long, std::string>;

bool cell_absent(const Cell& cell);
/// Numeric view of a cell (parses text); false when absent or non-numeric.
bool cell_number(const Cell& cell, double& out);
std::string cell_text(const Cell& cell);

/// A rectangular result table with a fixed header. Values are written with
/// enough digits to round-trip, so rerunning a seeded experiment reproduces
/// files byte for byte.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<Cell>& row(std::size_t i) const { return rows_[i]; }
  const Cell& at(std::size_t row, std::size_t col) const {
    return rows_[row][col];
  }
  /// Index of a named column, or -1.
  int column_index(const std::string& name) const;

  void add_row(std::vector<Cell> cells);

  void write_csv(std::ostream& out) const;
  void write_json(std::ostream& out) const;

  /// Parses a CSV written by write_csv (header row required, no quoting).
  static Table read_csv(std::istream& in);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

struct CompareReport {
  bool pass = true;
  double max_rel_error = 0.0;
  std::size_t compared = 0;
  std::string worst_key;
  std::vector<std::string> lines;  // per-row "key rel_error" entries
};

/// Matches rows of two result tables by their key columns and compares the
/// per-row values (simulation estimate when present, analytic value
/// otherwise) at the given relative tolerance. Throws SchemaMismatch when
/// the tables are not the same known kind or a key is missing from `b`.
CompareReport compare_tables(const Table& a, const Table& b,
                             double tolerance);

}  // namespace dagsim::experiments
