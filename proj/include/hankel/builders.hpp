#pragma once

#include "hankel/matrix.hpp"
#include "hankel/sequences.hpp"

#include <span>
#include <string>
#include <vector>

namespace hankel {

/// Row parameters alpha_0, ..., alpha_{len-1}.
using AlphaVector = std::vector<long>;

std::string format_alphas(std::span<const long> alphas);

// Every builder validates its preconditions and throws DomainError on
// violation. Matrices are indexed from 0 in both directions.

/// entry(i, j) = seq(i + j + offset)
ExactMatrix build_hankel(const SequenceSpec& seq, long n, long offset);

/// entry(i, j) = C_{alpha_i + j}; alphas.size() == n
ExactMatrix build_thm3_matrix(std::span<const long> alphas, long n);

/// entry(i, j) = C_{alpha_i + j} + C_{alpha_{i+1} + j}; alphas.size() == n + 1
ExactMatrix build_cor5_matrix(std::span<const long> alphas, long n);

/// entry(i, j) = C_{(k-1) alpha_i + j + beta, k}; 0 <= beta <= k-1
ExactMatrix build_thm6_matrix(std::span<const long> alphas, long k, long beta, long n);

/// entry(i, j) = C_{(k-1) alpha_i + j + beta, k} + C_{(k-1) alpha_{i+1} + j + beta, k}
ExactMatrix build_cor7_matrix(std::span<const long> alphas, long k, long beta, long n);

/// entry(i, j) = C_{(k-1) i + j + beta, k} + C_{(k-1) i + j + beta + 1, k}
ExactMatrix build_thm9_matrix(long k, long beta, long n);

/// entry(i, j) = C(k alpha_i + j + beta, alpha_i - 1); requires alpha_i >= 1.
/// The beta <= k-1 restriction does not apply here.
ExactMatrix build_eq43_matrix(std::span<const long> alphas, long k, long beta, long n);

/// Hankel matrix of the variant's sequence.
ExactMatrix build_thm10_matrix(Thm10Variant variant, long n);

/// entry(i, j) = (X_i + A_{n-1}) ... (X_i + A_{j+1}) * (X_i + B_j) ... (X_i + B_1).
/// `a` and `b` hold A_1..A_{n-1} and B_1..B_{n-1}; the order n is x.size().
ExactMatrix build_lemma1_matrix(std::span<const Rational> x, std::span<const Rational> a,
                                std::span<const Rational> b);

}  // namespace hankel
