#include "dagsim/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace dagsim::experiments {

namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string cell_to_csv(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return "";
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

}  // namespace

bool cell_absent(const Cell& cell) {
  return std::holds_alternative<std::monostate>(cell);
}

bool cell_number(const Cell& cell, double& out) {
  if (const auto* d = std::get_if<double>(&cell)) {
    out = *d;
    return true;
  }
  if (const auto* i = std::get_if<long long>(&cell)) {
    out = static_cast<double>(*i);
    return true;
  }
  if (const auto* s = std::get_if<std::string>(&cell)) {
    char* end = nullptr;
    const double v = std::strtod(s->c_str(), &end);
    if (end != s->c_str() && *end == '\0') {
      out = v;
      return true;
    }
  }
  return false;
}

std::string cell_text(const Cell& cell) { return cell_to_csv(cell); }

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

int Table::column_index(const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) return -1;
  return static_cast<int>(it - columns_.begin());
}

void Table::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size()) {
    throw SchemaMismatch("row width does not match header");
  }
  rows_.push_back(std::move(cells));
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out << ',';
    out << columns_[c];
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << cell_to_csv(row[c]);
    }
    out << '\n';
  }
}

void Table::write_json(std::ostream& out) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Cell& cell = row[c];
      if (std::holds_alternative<std::monostate>(cell)) {
        obj[columns_[c]] = nullptr;
      } else if (const auto* d = std::get_if<double>(&cell)) {
        obj[columns_[c]] = *d;
      } else if (const auto* i = std::get_if<long long>(&cell)) {
        obj[columns_[c]] = *i;
      } else {
        obj[columns_[c]] = std::get<std::string>(cell);
      }
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

Table Table::read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaMismatch("empty CSV file");
  auto split = [](const std::string& text) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(text);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!text.empty() && text.back() == ',') fields.emplace_back();
    return fields;
  };
  Table table(split(line));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line);
    fields.resize(table.columns().size());
    std::vector<Cell> cells;
    cells.reserve(fields.size());
    for (auto& f : fields) {
      if (f.empty()) {
        cells.emplace_back(std::monostate{});
      } else {
        cells.emplace_back(std::move(f));
      }
    }
    table.add_row(std::move(cells));
  }
  return table;
}

namespace {

struct SchemaKind {
  std::vector<std::string> keys;
  std::string sim_value;
  std::string analytic_value;
};

SchemaKind detect_kind(const Table& t) {
  if (t.column_index("expected_weight") >= 0) {
    return {{"regime", "t"}, "sim_mean", "expected_weight"};
  }
  if (t.column_index("delay_analytic") >= 0) {
    return {{"regime", "m", "lambda"}, "delay_sim_mean", "delay_analytic"};
  }
  if (t.column_index("prob_formula") >= 0) {
    return {{"regime", "m", "lambda", "mu"}, "prob_mc", "prob_formula"};
  }
  throw SchemaMismatch("not a weight, delay or attack table");
}

std::string row_key(const Table& t, std::size_t row,
                    const std::vector<int>& key_cols) {
  std::string key;
  for (int c : key_cols) {
    key += cell_text(t.at(row, static_cast<std::size_t>(c)));
    key += '|';
  }
  return key;
}

// Simulation estimate when present, analytic value otherwise; identical
// files therefore compare at zero error.
bool row_value(const Table& t, std::size_t row, int sim_col, int ana_col,
               double& out) {
  if (sim_col >= 0 &&
      cell_number(t.at(row, static_cast<std::size_t>(sim_col)), out)) {
    return true;
  }
  return ana_col >= 0 &&
         cell_number(t.at(row, static_cast<std::size_t>(ana_col)), out);
}

}  // namespace

CompareReport compare_tables(const Table& a, const Table& b,
                             double tolerance) {
  const SchemaKind kind = detect_kind(a);
  const SchemaKind kind_b = detect_kind(b);
  if (kind.analytic_value != kind_b.analytic_value) {
    throw SchemaMismatch("tables are of different kinds");
  }

  auto key_columns = [&](const Table& t) {
    std::vector<int> cols;
    for (const auto& name : kind.keys) {
      const int c = t.column_index(name);
      if (c < 0) throw SchemaMismatch("missing key column " + name);
      cols.push_back(c);
    }
    return cols;
  };
  const auto keys_a = key_columns(a);
  const auto keys_b = key_columns(b);

  std::unordered_map<std::string, std::size_t> index_b;
  for (std::size_t r = 0; r < b.row_count(); ++r) {
    index_b[row_key(b, r, keys_b)] = r;
  }

  const int sim_a = a.column_index(kind.sim_value);
  const int ana_a = a.column_index(kind.analytic_value);
  const int sim_b = b.column_index(kind.sim_value);
  const int ana_b = b.column_index(kind.analytic_value);

  CompareReport report;
  for (std::size_t r = 0; r < a.row_count(); ++r) {
    const std::string key = row_key(a, r, keys_a);
    const auto it = index_b.find(key);
    if (it == index_b.end()) {
      throw SchemaMismatch("row key not found in second table: " + key);
    }
    double va = 0.0;
    double vb = 0.0;
    if (!row_value(a, r, sim_a, ana_a, va) ||
        !row_value(b, it->second, sim_b, ana_b, vb)) {
      continue;  // nothing comparable on this row
    }
    const double scale = std::max(std::abs(va), std::abs(vb));
    const double rel = scale > 0.0 ? std::abs(va - vb) / scale : 0.0;
    ++report.compared;
    report.lines.push_back(key + " rel_error=" + format_number(rel));
    if (rel > report.max_rel_error) {
      report.max_rel_error = rel;
      report.worst_key = key;
    }
  }
  report.pass = report.max_rel_error <= tolerance;
  return report;
}

}  // namespace dagsim::experiments
