// Copyright 2026 The tonks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tonks::cli {

/// Missing values are monostate: an empty CSV field, null in JSON.
using Cell = std::variant<std::monostate, std::string, double, std::int64_t>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { kCsv, kJson };

/// One header row, fixed column order, floats with 17 significant digits.
std::string to_csv(const Table& table);
/// Array of objects, keys in column order.
std::string to_json(const Table& table);
std::string emit(const Table& table, Format format);

/// Inverse of to_csv. A field is read as an integer, then a float, then a
/// string, which makes parse-then-emit byte-identical on our own output.
Table parse_csv(std::string_view text);
Table parse_json(std::string_view text);

}  // namespace tonks::cli
