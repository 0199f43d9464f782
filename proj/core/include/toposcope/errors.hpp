#pragma once

#include <stdexcept>
#include <string>

namespace toposcope {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sort mismatches, unknown symbols, duplicate declarations, broken invariants.
struct WellFormednessError : Error {
  using Error::Error;
};

// Exceeded a configured search/enumeration guard.
struct ResourceError : Error {
  using Error::Error;
};

// A constructed table fails its algebraic laws.
struct AlgebraError : Error {
  using Error::Error;
};

// Text input rejected; carries 1-based line/column.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
        line(line_), column(column_) {}
};

}  // namespace toposcope
