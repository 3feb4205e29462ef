#pragma once

#include "hankel/arith.hpp"
#include "hankel/sequences.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hankel {

enum class IdentityKind {
  Eq1_1, Eq1_2, Eq1_3, Eq1_4, Eq1_6, Eq1_7,
  Thm3, Cor5, Thm6, Eq4_3, Cor7, Thm9, Prop8, Thm10, Lemma1,
};

/// Names one proven determinant identity. `variant` is only meaningful for Thm10.
struct ClosedFormId {
  IdentityKind kind = IdentityKind::Eq1_1;
  Thm10Variant variant = Thm10Variant::E5_2;

  bool operator==(const ClosedFormId&) const = default;
};

/// "Eq1_1", ..., "Thm10_5_2", ..., "Lemma1".
std::string to_string(const ClosedFormId& id);

/// Case-insensitive inverse of to_string; also accepts "Thm10_5.2".
std::optional<ClosedFormId> parse_closed_form_id(std::string_view text);

// Right-hand sides. Each throws DomainError when its parameters fall outside
// the identity's hypotheses. Results are exact; the integer-valued ones check
// integrality before returning.

Integer rhs_eq1_1(long n);
Integer rhs_eq1_2(long n);
Integer rhs_eq1_3(long n);
/// F_{2n}
Integer rhs_eq1_4(long n);
/// sum_{s=0..n} C((k-1)s + n, n-s)
Integer rhs_eq1_6(long k, long n);
/// sum_{s=0..n} C(floor(s/(k-1)) + n, n-s)
Integer rhs_eq1_7(long k, long n);

/// prod_{i<j} (alpha_j - alpha_i) * prod_i (i+n)! (2 alpha_i)! / ((2i)! alpha_i! (alpha_i+n)!)
Rational rhs_thm3(std::span<const long> alphas, long n);

/// Needs n+1 pairwise distinct alphas; a repeat makes the sum's denominators
/// vanish and is rejected with DomainError.
Rational rhs_cor5(std::span<const long> alphas, long n);

Rational rhs_thm6(std::span<const long> alphas, long k, long beta, long n);

/// Requires alpha_i >= 1; beta is any nonnegative integer.
Rational rhs_eq43(std::span<const long> alphas, long k, long beta, long n);

Rational rhs_cor7(std::span<const long> alphas, long k, long beta, long n);

/// sum_{s=0..n} C(floor((s+beta)/(k-1)) + n, n-s); n == 0 gives 1.
Integer rhs_thm9(long k, long beta, long n);

/// Family count for paths (a, b-i) -> (alpha_i, c). Requires
/// a <= alpha_0 <= ... <= alpha_{n-1} and b <= c.
Rational rhs_prop8(long a, long b, long c, std::span<const long> alphas, long n);

/// Product of Pochhammer ratios times (27/4)^{2i}, with the per-variant
/// product limit (n-1 or n) and leading constant.
Rational rhs_thm10(Thm10Variant variant, long n);

/// prod_{i<j} (X_i - X_j) * prod_{1<=i<=j<=n-1} (B_i - A_j), with a/b holding
/// A_1..A_{n-1} and B_1..B_{n-1}.
Rational rhs_lemma1(std::span<const Rational> x, std::span<const Rational> a,
                    std::span<const Rational> b);

}  // namespace hankel
