// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#include "tonks_cli/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"
#include "tonks/errors.hpp"

namespace tonks::cli {
namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool needs_quotes(const std::string& s) {
  return s.find_first_of(",\"\n\r") != std::string::npos;
}

Cell infer(std::string field, bool quoted) {
  if (quoted) return field;
  if (field.empty()) return std::monostate{};
  std::int64_t i = 0;
  const char* first = field.data();
  const char* last = first + field.size();
  if (auto [p, ec] = std::from_chars(first, last, i); ec == std::errc() && p == last && std::to_string(i) == field) {
    return i;  // "-0" and "007" fall through so they print back unchanged
  }
  char* end = nullptr;
  const double d = std::strtod(field.c_str(), &end);
  if (end == field.c_str() + field.size()) return d;
  return field;
}

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const std::string& s) const {
      // Quote anything that would read back as a number or a missing value.
      if (!needs_quotes(s) && std::holds_alternative<std::string>(infer(s, false))) return s;
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + '"';
    }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
  };
  return std::visit(Visitor{}, cell);
}

std::vector<std::vector<std::pair<std::string, bool>>> split_csv(std::string_view text) {
  std::vector<std::vector<std::pair<std::string, bool>>> records;
  std::vector<std::pair<std::string, bool>> record;
  std::string field;
  bool quoted = false;
  bool in_quotes = false;
  bool pending = false;  // something seen since the last record break
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    pending = true;
    if (c == '"') {
      in_quotes = true;
      quoted = true;
    } else if (c == ',') {
      record.emplace_back(std::move(field), quoted);
      field.clear();
      quoted = false;
    } else if (c == '\n') {
      record.emplace_back(std::move(field), quoted);
      records.push_back(std::move(record));
      record.clear();
      field.clear();
      quoted = false;
      pending = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (in_quotes) throw ParseError("unterminated quoted CSV field");
  if (pending) {
    record.emplace_back(std::move(field), quoted);
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& cell = row[i];
      nlohmann::ordered_json value;
      if (const auto* s = std::get_if<std::string>(&cell)) {
        value = *s;
      } else if (const auto* d = std::get_if<double>(&cell)) {
        if (std::isfinite(*d)) value = *d;
      } else if (const auto* n = std::get_if<std::int64_t>(&cell)) {
        value = *n;
      }
      obj[table.columns[i]] = std::move(value);
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

std::string emit(const Table& table, Format format) {
  return format == Format::kCsv ? to_csv(table) : to_json(table);
}

Table parse_csv(std::string_view text) {
  auto records = split_csv(text);
  if (records.empty()) throw ParseError("CSV input has no header row");
  Table table;
  for (auto& [name, quoted] : records.front()) table.columns.push_back(std::move(name));
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.columns.size()) {
      throw ParseError("CSV row " + std::to_string(r) + " has the wrong number of fields");
    }
    std::vector<Cell> row;
    for (auto& [field, quoted] : records[r]) row.push_back(infer(std::move(field), quoted));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table parse_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_array()) throw ParseError("JSON table must be an array of objects");
  Table table;
  for (const auto& obj : doc) {
    if (!obj.is_object()) throw ParseError("JSON table rows must be objects");
    if (table.columns.empty()) {
      for (const auto& item : obj.items()) table.columns.push_back(item.key());
    }
    std::vector<Cell> row;
    for (const auto& name : table.columns) {
      if (!obj.contains(name)) throw ParseError("JSON row is missing column " + name);
      const auto& v = obj.at(name);
      if (v.is_null()) {
        row.emplace_back(std::monostate{});
      } else if (v.is_string()) {
        row.emplace_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<std::int64_t>());
      } else if (v.is_number_float()) {
        row.emplace_back(v.get<double>());
      } else {
        throw ParseError("unsupported JSON cell in column " + name);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace tonks::cli
