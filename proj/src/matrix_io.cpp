#include "hankel/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace hankel {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kProvenanceTag = "# provenance: ";

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size() && line[i] != '#') {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

}  // namespace

ExactMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t order = 0;
  std::vector<Rational> entries;
  Provenance provenance{"file", ""};
  bool have_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header && line.starts_with(kProvenanceTag)) {
      std::string rest = line.substr(kProvenanceTag.size());
      auto space = rest.find(' ');
      provenance.builder = rest.substr(0, space);
      provenance.params = space == std::string::npos ? "" : rest.substr(space + 1);
      continue;
    }
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 1) {
        throw ParseError(line_no, tokens[1].column, "header must contain only the order n");
      }
      const auto& t = tokens[0];
      if (t.text.empty() ||
          !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(c); })) {
        throw ParseError(line_no, t.column, "order must be a positive integer, got '" + t.text + "'");
      }
      order = std::stoul(t.text);
      if (order == 0) throw ParseError(line_no, t.column, "order must be at least 1");
      have_header = true;
      entries.reserve(order * order);
      continue;
    }

    const std::size_t row = entries.size() / order;
    if (row >= order) {
      throw ParseError(line_no, tokens[0].column,
                       "unexpected extra row (matrix has order " + std::to_string(order) + ")");
    }
    if (tokens.size() != order) {
      const std::size_t col = tokens.size() > order ? tokens[order].column : line.size() + 1;
      throw ParseError(line_no, col,
                       "row has " + std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(order));
    }
    for (const auto& t : tokens) {
      try {
        entries.push_back(parse_rational(t.text));
      } catch (const DomainError&) {
        throw ParseError(line_no, t.column, "zero denominator in '" + t.text + "'");
      } catch (const std::invalid_argument&) {
        throw ParseError(line_no, t.column, "malformed entry '" + t.text + "'");
      }
    }
  }

  if (!have_header) throw ParseError(line_no + 1, 1, "missing order header");
  if (entries.size() != order * order) {
    throw ParseError(line_no + 1, 1,
                     "expected " + std::to_string(order) + " rows, got " +
                         std::to_string(entries.size() / order));
  }
  return ExactMatrix(order, std::move(entries), std::move(provenance));
}

ExactMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const ExactMatrix& m) {
  const auto& p = m.provenance();
  out << kProvenanceTag << p.builder;
  if (!p.params.empty()) out << ' ' << p.params;
  out << '\n' << m.order() << '\n';
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) out << ' ';
      out << to_string(m(i, j));
    }
    out << '\n';
  }
}

std::string matrix_to_text(const ExactMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace hankel
