#pragma once

#include "hankel/matrix.hpp"

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace hankel::test {

inline Rational q(const std::string& text) { return parse_rational(text); }

inline ExactMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long v : r) out.back().emplace_back(v);
  }
  return ExactMatrix::from_rows(out);
}

inline std::vector<std::vector<Rational>> rows_of(const ExactMatrix& m) {
  std::vector<std::vector<Rational>> out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
  return out;
}

inline bool entries_equal(const ExactMatrix& m, std::initializer_list<std::initializer_list<long>> rows) {
  return m.same_entries(mat(rows));
}

}  // namespace hankel::test

namespace doctest {
template <>
struct StringMaker<mpq_class> {
  static String convert(const mpq_class& v) { return v.get_str().c_str(); }
};
template <>
struct StringMaker<mpz_class> {
  static String convert(const mpz_class& v) { return v.get_str().c_str(); }
};
}  // namespace doctest
