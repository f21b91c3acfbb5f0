#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "mde/linalg.hpp"

namespace mde::cli {

/// Malformed numeric CSV input; line and column are 1-based.
class CsvError : public std::runtime_error {
 public:
  CsvError(int line, int column, const std::string& what);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Reads a rectangular table of numbers. Blank lines are ignored; with
/// has_header the first non-blank line is skipped. Every row must have the
/// same number of fields.
Matrix read_numeric_csv(std::istream& in, bool has_header);

}  // namespace mde::cli
