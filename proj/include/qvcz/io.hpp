#pragma once

#include <string>
#include <variant>
#include <vector>

namespace qvcz {

using Cell = std::variant<double, std::string>;

/// A column-ordered result table.  Comment lines are echoed verbatim at the
/// top of CSV output ('#'-prefixed) and dropped from JSON output.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Round-trip-exact rendering of a double (17 significant digits).
std::string format_double(double v);

std::string to_csv(const Table& t);

/// Rows as a JSON array of objects with the column names as keys.
std::string to_json(const Table& t);

/// Writes content to path via a temp file in the same directory plus
/// rename.  Throws IoError when the destination is unwritable.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace qvcz
