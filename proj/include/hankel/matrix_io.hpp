#pragma once

#include "hankel/matrix.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hankel {

/// Malformed matrix text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Text format:
//
//   # provenance: <builder> <params>     (optional, written by write_matrix)
//   n
//   e00 e01 ... e0(n-1)
//   ...
//
// Entries are "p" or "p/q". Anything after '#' is a comment; blank lines are
// ignored. Each matrix row must sit on its own line.

ExactMatrix read_matrix(std::istream& in);
ExactMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const ExactMatrix& m);
std::string matrix_to_text(const ExactMatrix& m);

}  // namespace hankel
