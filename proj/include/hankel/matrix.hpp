#pragma once

#include "hankel/arith.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace hankel {

/// Which builder produced a matrix, and with what parameters.
struct Provenance {
  std::string builder = "literal";
  std::string params;

  bool operator==(const Provenance&) const = default;
};

/// Dense square matrix of exact rationals, order >= 1.
///
/// Entries are fixed at construction. `is_integral()` is computed once so the
/// determinant dispatcher can route to the fraction-free engine cheaply.
class ExactMatrix {
 public:
  /// Row-major entries; entries.size() must equal order * order.
  ExactMatrix(std::size_t order, std::vector<Rational> entries, Provenance provenance = {});

  /// Throws std::invalid_argument on empty or ragged input.
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                               Provenance provenance = {});

  template <typename Fn>
  static ExactMatrix generate(std::size_t order, Fn&& entry, Provenance provenance = {}) {
    // A lambda returning a + b would hand back a gmpxx expression that
    // refers to destroyed temporaries.
    using R = std::decay_t<std::invoke_result_t<Fn&, std::size_t, std::size_t>>;
    static_assert(std::is_same_v<R, Rational> || std::is_same_v<R, Integer> || std::is_arithmetic_v<R>,
                  "entry generator must return Rational, Integer or a builtin number");
    std::vector<Rational> entries;
    entries.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) entries.emplace_back(entry(i, j));
    return ExactMatrix(order, std::move(entries), std::move(provenance));
  }

  std::size_t order() const { return order_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(entries_).subspan(i * order_, order_);
  }
  std::span<const Rational> entries() const { return entries_; }

  bool is_integral() const { return integral_; }
  const Provenance& provenance() const { return provenance_; }

  /// Contiguous square block starting at (row, col).
  ExactMatrix block(std::size_t row, std::size_t col, std::size_t size) const;

  /// Same entries, different provenance.
  ExactMatrix with_provenance(Provenance provenance) const;

  /// Entry-wise equality; provenance is ignored.
  bool same_entries(const ExactMatrix& other) const;

 private:
  std::size_t order_;
  std::vector<Rational> entries_;
  Provenance provenance_;
  bool integral_;
};

}  // namespace hankel
