#include "hankel/determinants.hpp"

#include <chrono>
#include <utility>
#include <vector>

namespace hankel {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::Laplace: return "laplace";
    case Engine::FractionFreeElim: return "fraction-free";
    case Engine::RationalElim: return "rational";
    case Engine::Condensation: return "condensation";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view text) {
  if (text == "laplace") return Engine::Laplace;
  if (text == "fraction-free" || text == "bareiss") return Engine::FractionFreeElim;
  if (text == "rational") return Engine::RationalElim;
  if (text == "condensation" || text == "dodgson") return Engine::Condensation;
  return std::nullopt;
}

namespace {

Rational laplace_rec(const ExactMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.size() == 1) return m(row, cols[0]);
  Rational sum = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Rational& a = m(row, cols[c]);
    if (a == 0) continue;
    std::size_t removed = cols[c];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
    Rational minor = laplace_rec(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), removed);
    if (c % 2 == 0)
      sum += a * minor;
    else
      sum -= a * minor;
  }
  return sum;
}

}  // namespace

Rational det_laplace(const ExactMatrix& m) {
  if (m.order() > kLaplaceMaxOrder) {
    throw Refused("laplace: order " + std::to_string(m.order()) + " exceeds limit " +
                  std::to_string(kLaplaceMaxOrder));
  }
  std::vector<std::size_t> cols(m.order());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return laplace_rec(m, 0, cols);
}

Integer det_fraction_free(const ExactMatrix& m, DetStats* stats) {
  if (!m.is_integral()) {
    throw DomainError("fraction-free elimination requires integer entries");
  }
  const std::size_t n = m.order();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num();

  DetStats local;
  int sign = 1;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) {
        if (stats) *stats = local;
        return Integer(0);
      }
      std::swap(a[k], a[r]);
      sign = -sign;
      ++local.row_swaps;
    }
    ++local.pivots;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  if (stats) *stats = local;
  return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

Rational det_rational_elim(const ExactMatrix& m, DetStats* stats) {
  const std::size_t n = m.order();
  std::vector<std::vector<Rational>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = m.row(i);
    a[i].assign(r.begin(), r.end());
  }

  DetStats local;
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r][k] == 0) ++r;
    if (r == n) {
      if (stats) *stats = local;
      return Rational(0);
    }
    if (r != k) {
      std::swap(a[k], a[r]);
      result = -result;
      ++local.row_swaps;
    }
    ++local.pivots;
    result *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational factor = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= factor * a[k][j];
      a[i][k] = 0;
    }
  }
  if (stats) *stats = local;
  return result;
}

Rational det_condensation(const ExactMatrix& m, DetStats* stats) {
  const std::size_t n = m.order();
  DetStats local;

  // cur holds the connected minors of order `level`, prev those of order
  // level-1 (all ones at the start).
  using Grid = std::vector<std::vector<Rational>>;
  Grid prev(n + 1, std::vector<Rational>(n + 1, Rational(1)));
  Grid cur(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cur[i][j] = m(i, j);

  for (std::size_t level = 1; level < n; ++level) {
    const std::size_t size = n - level;
    Grid next(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        const Rational& divisor = prev[i + 1][j + 1];
        if (divisor == 0) {
          next[i][j] = det_rational_elim(m.block(i, j, level + 1));
          ++local.fallbacks;
        } else {
          next[i][j] = (cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]) / divisor;
        }
      }
    }
    ++local.pivots;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (stats) *stats = local;
  return cur[0][0];
}

DetResult det(const ExactMatrix& m, std::optional<Engine> engine) {
  const Engine chosen =
      engine.value_or(m.is_integral() ? Engine::FractionFreeElim : Engine::RationalElim);
  DetResult result{Rational(0), chosen, {}};
  const auto start = std::chrono::steady_clock::now();
  switch (chosen) {
    case Engine::Laplace: result.value = det_laplace(m); break;
    case Engine::FractionFreeElim: result.value = Rational(det_fraction_free(m, &result.stats)); break;
    case Engine::RationalElim: result.value = det_rational_elim(m, &result.stats); break;
    case Engine::Condensation: result.value = det_condensation(m, &result.stats); break;
  }
  const auto stop = std::chrono::steady_clock::now();
  result.stats.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

}  // namespace hankel
