#include "hankel/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

ExactMatrix::ExactMatrix(std::size_t order, std::vector<Rational> entries, Provenance provenance)
    : order_(order), entries_(std::move(entries)), provenance_(std::move(provenance)) {
  if (order_ == 0) throw std::invalid_argument("matrix order must be at least 1");
  if (entries_.size() != order_ * order_) {
    throw std::invalid_argument("matrix of order " + std::to_string(order_) + " needs " +
                                std::to_string(order_ * order_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  integral_ = std::all_of(entries_.begin(), entries_.end(),
                          [](const Rational& r) { return hankel::is_integral(r); });
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                                   Provenance provenance) {
  const std::size_t n = rows.size();
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  return ExactMatrix(n, std::move(entries), std::move(provenance));
}

ExactMatrix ExactMatrix::block(std::size_t row, std::size_t col, std::size_t size) const {
  if (row + size > order_ || col + size > order_) {
    throw std::out_of_range("block exceeds matrix bounds");
  }
  return generate(
      size, [&](std::size_t i, std::size_t j) { return (*this)(row + i, col + j); },
      Provenance{"block", provenance_.builder});
}

ExactMatrix ExactMatrix::with_provenance(Provenance provenance) const {
  ExactMatrix copy = *this;
  copy.provenance_ = std::move(provenance);
  return copy;
}

bool ExactMatrix::same_entries(const ExactMatrix& other) const {
  return order_ == other.order_ && entries_ == other.entries_;
}

}  // namespace hankel
