#pragma once
// Reference computations for the tests. Each one is deliberately naive and
// shares no code with the library beyond the GMP number types.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

inline mpz_class factorial(long n) {
  mpz_class r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Pascal's triangle, rebuilt on every call.
inline mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<mpz_class> row{1};
  for (long m = 1; m <= n; ++m) {
    std::vector<mpz_class> next(row.size() + 1);
    next.front() = next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// x (x-1) ... (x-k+1) / k!
inline mpq_class falling_binomial(const mpq_class& x, long k) {
  mpq_class r = 1;
  for (long i = 0; i < k; ++i) r *= (x - i);
  r /= mpq_class(factorial(k));
  r.canonicalize();
  return r;
}

inline mpz_class fibonacci(long m) {
  mpz_class a = 1, b = 1;
  for (long i = 0; i < m; ++i) {
    mpz_class t = a + b;
    a = b;
    b = t;
  }
  return a;
}

// Explicit walk over every monotone path; counts those with x >= mu*y throughout.
inline mpz_class brute_paths(long ax, long ay, long ex, long ey, std::optional<long> mu) {
  std::function<mpz_class(long, long)> walk = [&](long x, long y) -> mpz_class {
    if (mu && x < *mu * y) return 0;
    if (x == ex && y == ey) return 1;
    mpz_class total = 0;
    if (x < ex) total += walk(x + 1, y);
    if (y < ey) total += walk(x, y + 1);
    return total;
  };
  if (ex < ax || ey < ay) return 0;
  return walk(ax, ay);
}

inline mpz_class catalan_by_paths(long n) { return brute_paths(0, 0, n, n, 1); }

inline mpz_class gen_catalan_by_paths(long n, long k) {
  return brute_paths(0, 0, n, n / (k - 1), k - 1);
}

// Leibniz expansion over all permutations.
inline mpq_class leibniz_det(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<mpq_class>> random_int_matrix(std::mt19937_64& rng, std::size_t n,
                                                             long lo, long hi) {
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (auto& row : m)
    for (auto& v : row) v = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  return m;
}

}  // namespace oracle
