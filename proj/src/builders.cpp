#include "hankel/builders.hpp"

#include <sstream>

namespace hankel {

namespace {

void require_order(long n) {
  if (n < 1) throw DomainError("matrix order must be >= 1, got " + std::to_string(n));
}

void require_alphas(std::span<const long> alphas, std::size_t expected, long min_value = 0) {
  if (alphas.size() != expected) {
    throw DomainError("expected " + std::to_string(expected) + " alpha values, got " +
                      std::to_string(alphas.size()));
  }
  for (long a : alphas) {
    if (a < min_value) {
      throw DomainError("alpha value " + std::to_string(a) + " is below " +
                        std::to_string(min_value));
    }
  }
}

void require_k_beta(long k, long beta) {
  if (k < 2) throw DomainError("k must be >= 2, got " + std::to_string(k));
  if (beta < 0 || beta > k - 1) {
    throw DomainError("beta must satisfy 0 <= beta <= k-1, got beta=" + std::to_string(beta) +
                      " k=" + std::to_string(k));
  }
}

std::string kbn(long k, long beta, long n) {
  return "k=" + std::to_string(k) + " beta=" + std::to_string(beta) + " n=" + std::to_string(n);
}

Rational gc(long index, long k) { return Rational(gen_catalan(index, k)); }

}  // namespace

std::string format_alphas(std::span<const long> alphas) {
  std::ostringstream out;
  for (std::size_t i = 0; i < alphas.size(); ++i) out << (i ? "," : "") << alphas[i];
  return out.str();
}

ExactMatrix build_hankel(const SequenceSpec& seq, long n, long offset) {
  require_order(n);
  if (offset < 0) throw DomainError("hankel offset must be >= 0");
  return ExactMatrix::generate(
      n, [&](std::size_t i, std::size_t j) -> Rational { return sequence_value(seq, i + j + offset); },
      {"hankel", describe(seq) + " n=" + std::to_string(n) + " offset=" + std::to_string(offset)});
}

ExactMatrix build_thm3_matrix(std::span<const long> alphas, long n) {
  require_order(n);
  require_alphas(alphas, n);
  return ExactMatrix::generate(
      n, [&](std::size_t i, std::size_t j) -> Rational { return Rational(catalan(alphas[i] + j)); },
      {"thm3", "alpha=" + format_alphas(alphas) + " n=" + std::to_string(n)});
}

ExactMatrix build_cor5_matrix(std::span<const long> alphas, long n) {
  require_order(n);
  require_alphas(alphas, n + 1);
  return ExactMatrix::generate(
      n,
      [&](std::size_t i, std::size_t j) -> Rational {
        return Rational(catalan(alphas[i] + j) + catalan(alphas[i + 1] + j));
      },
      {"cor5", "alpha=" + format_alphas(alphas) + " n=" + std::to_string(n)});
}

ExactMatrix build_thm6_matrix(std::span<const long> alphas, long k, long beta, long n) {
  require_order(n);
  require_k_beta(k, beta);
  require_alphas(alphas, n);
  return ExactMatrix::generate(
      n, [&](std::size_t i, std::size_t j) -> Rational { return gc((k - 1) * alphas[i] + j + beta, k); },
      {"thm6", "alpha=" + format_alphas(alphas) + " " + kbn(k, beta, n)});
}

ExactMatrix build_cor7_matrix(std::span<const long> alphas, long k, long beta, long n) {
  require_order(n);
  require_k_beta(k, beta);
  require_alphas(alphas, n + 1);
  return ExactMatrix::generate(
      n,
      [&](std::size_t i, std::size_t j) -> Rational {
        return gc((k - 1) * alphas[i] + j + beta, k) + gc((k - 1) * alphas[i + 1] + j + beta, k);
      },
      {"cor7", "alpha=" + format_alphas(alphas) + " " + kbn(k, beta, n)});
}

ExactMatrix build_thm9_matrix(long k, long beta, long n) {
  require_order(n);
  require_k_beta(k, beta);
  return ExactMatrix::generate(
      n,
      [&](std::size_t i, std::size_t j) -> Rational {
        const long base = (k - 1) * static_cast<long>(i) + static_cast<long>(j) + beta;
        return gc(base, k) + gc(base + 1, k);
      },
      {"thm9", kbn(k, beta, n)});
}

ExactMatrix build_eq43_matrix(std::span<const long> alphas, long k, long beta, long n) {
  require_order(n);
  if (k < 2) throw DomainError("k must be >= 2, got " + std::to_string(k));
  if (beta < 0) throw DomainError("beta must be >= 0, got " + std::to_string(beta));
  require_alphas(alphas, n, 1);
  return ExactMatrix::generate(
      n,
      [&](std::size_t i, std::size_t j) -> Rational {
        return Rational(binomial_int(k * alphas[i] + j + beta, alphas[i] - 1));
      },
      {"eq4.3", "alpha=" + format_alphas(alphas) + " " + kbn(k, beta, n)});
}

ExactMatrix build_thm10_matrix(Thm10Variant variant, long n) {
  require_order(n);
  return ExactMatrix::generate(
      n, [&](std::size_t i, std::size_t j) -> Rational { return thm10_hankel_term(variant, i + j); },
      {"thm10", "variant=" + std::string(to_string(variant)) + " n=" + std::to_string(n)});
}

ExactMatrix build_lemma1_matrix(std::span<const Rational> x, std::span<const Rational> a,
                                std::span<const Rational> b) {
  const std::size_t n = x.size();
  require_order(static_cast<long>(n));
  if (a.size() != n - 1 || b.size() != n - 1) {
    throw DomainError("lemma1 needs " + std::to_string(n - 1) + " A and B values");
  }
  // a[t-1] holds A_t, b[t-1] holds B_t.
  return ExactMatrix::generate(
      n,
      [&](std::size_t i, std::size_t j) -> Rational {
        Rational v = 1;
        for (std::size_t t = j + 1; t <= n - 1; ++t) v *= x[i] + a[t - 1];
        for (std::size_t t = 1; t <= j; ++t) v *= x[i] + b[t - 1];
        return v;
      },
      {"lemma1", "n=" + std::to_string(n)});
}

}  // namespace hankel
