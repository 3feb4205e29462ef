#include "hankel/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace hankel {

namespace {

struct KindName {
  IdentityKind kind;
  std::string_view name;
};

constexpr std::array kKindNames{
    KindName{IdentityKind::Eq1_1, "Eq1_1"}, KindName{IdentityKind::Eq1_2, "Eq1_2"},
    KindName{IdentityKind::Eq1_3, "Eq1_3"}, KindName{IdentityKind::Eq1_4, "Eq1_4"},
    KindName{IdentityKind::Eq1_6, "Eq1_6"}, KindName{IdentityKind::Eq1_7, "Eq1_7"},
    KindName{IdentityKind::Thm3, "Thm3"},   KindName{IdentityKind::Cor5, "Cor5"},
    KindName{IdentityKind::Thm6, "Thm6"},   KindName{IdentityKind::Eq4_3, "Eq4_3"},
    KindName{IdentityKind::Cor7, "Cor7"},   KindName{IdentityKind::Thm9, "Thm9"},
    KindName{IdentityKind::Prop8, "Prop8"}, KindName{IdentityKind::Thm10, "Thm10"},
    KindName{IdentityKind::Lemma1, "Lemma1"},
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void require_n(long n, long min = 1) {
  if (n < min) throw DomainError("n must be >= " + std::to_string(min) + ", got " + std::to_string(n));
}

void require_k_beta(long k, long beta) {
  if (k < 2) throw DomainError("k must be >= 2, got " + std::to_string(k));
  if (beta < 0 || beta > k - 1) {
    throw DomainError("beta must satisfy 0 <= beta <= k-1, got beta=" + std::to_string(beta));
  }
}

void require_length(std::span<const long> alphas, std::size_t len, long min_value = 0) {
  if (alphas.size() != len) {
    throw DomainError("expected " + std::to_string(len) + " alpha values, got " +
                      std::to_string(alphas.size()));
  }
  for (long a : alphas) {
    if (a < min_value) throw DomainError("alpha value " + std::to_string(a) + " out of range");
  }
}

Integer vandermonde(std::span<const long> alphas) {
  Integer v = 1;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j) v *= alphas[j] - alphas[i];
  return v;
}

Rational ratio(const Integer& p, const Integer& q) { return make_rational(p, q); }

// Shared shape of the two corollaries (Catalan case is k = 2, beta = 0):
//   prod_{i<j<=n} (a_j - a_i) * prod_{i<n} ((k-1)i+b+n)!/(ki+b)!
//   * prod_{i<=n} (k a_i + b)!/(a_i! ((k-1)a_i+b+n)!)
//   * sum_s a_s! ((k-1)a_s+b+n)! / ((k a_s + b)! prod_{j<s}(a_s-a_j) prod_{j>s}(a_j-a_s))
Rational two_row_corollary(std::span<const long> alphas, long k, long beta, long n) {
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j]) {
        throw DomainError("repeated alpha value " + std::to_string(alphas[i]) +
                          " makes the right-hand side singular");
      }

  Rational front(vandermonde(alphas));
  for (long i = 0; i < n; ++i) front *= ratio(factorial((k - 1) * i + beta + n), factorial(k * i + beta));
  for (long a : alphas) {
    front *= ratio(factorial(k * a + beta), factorial(a) * factorial((k - 1) * a + beta + n));
  }

  Rational sum = 0;
  for (long s = 0; s <= n; ++s) {
    const long as = alphas[s];
    Integer den = factorial(k * as + beta);
    for (long j = 0; j < s; ++j) den *= as - alphas[j];
    for (long j = s + 1; j <= n; ++j) den *= alphas[j] - as;
    sum += ratio(factorial(as) * factorial((k - 1) * as + beta + n), den);
  }
  return front * sum;
}

struct Thm10Shape {
  bool through_n;  // product runs over 0..n instead of 0..n-1
  long lead;
  std::array<Rational, 4> rising;   // (x)_i factors in the numerator
  std::array<Rational, 2> doubled;  // (y)_{2i} factors in the denominator
};

Thm10Shape thm10_shape(Thm10Variant v) {
  const std::array<Rational, 4> first{Rational(2, 3), Rational(1, 6), Rational(4, 3), Rational(5, 6)};
  const std::array<Rational, 2> first_den{Rational(1, 2), Rational(3, 2)};
  const std::array<Rational, 4> second{Rational(4, 3), Rational(5, 6), Rational(5, 3), Rational(7, 6)};
  const std::array<Rational, 2> second_den{Rational(3, 2), Rational(5, 2)};
  switch (v) {
    case Thm10Variant::E5_2: return {false, 1, first, first_den};
    case Thm10Variant::E5_3: return {false, 1, second, second_den};
    case Thm10Variant::E5_4: return {false, 1, second, second_den};
    case Thm10Variant::E5_5: return {true, 1, first, first_den};
    case Thm10Variant::E5_6: return {true, 1, first, first_den};
    case Thm10Variant::E5_7: return {true, 1, second, second_den};
    case Thm10Variant::E5_8:
      return {false, -2, {Rational(1, 3), Rational(-1, 6), Rational(5, 3), Rational(7, 6)}, first_den};
    case Thm10Variant::E5_9:
      return {false, 10, {Rational(2, 3), Rational(1, 6), Rational(7, 3), Rational(11, 6)}, second_den};
    case Thm10Variant::E5_10: return {true, 1, second, second_den};
    case Thm10Variant::E5_11: return {true, 1, second, second_den};
  }
  return {false, 1, first, first_den};
}

}  // namespace

std::string to_string(const ClosedFormId& id) {
  for (const auto& kn : kKindNames) {
    if (kn.kind != id.kind) continue;
    std::string name(kn.name);
    if (id.kind == IdentityKind::Thm10) {
      std::string v(to_string(id.variant));
      std::replace(v.begin(), v.end(), '.', '_');
      name += "_" + v;
    }
    return name;
  }
  return "?";
}

std::optional<ClosedFormId> parse_closed_form_id(std::string_view text) {
  const std::string wanted = lower(text);
  for (const auto& kn : kKindNames) {
    if (kn.kind == IdentityKind::Thm10) {
      for (auto v : kAllThm10Variants) {
        ClosedFormId id{IdentityKind::Thm10, v};
        std::string dotted = "thm10_" + std::string(to_string(v));
        if (lower(to_string(id)) == wanted || dotted == wanted) return id;
      }
    } else if (lower(kn.name) == wanted) {
      return ClosedFormId{kn.kind, Thm10Variant::E5_2};
    }
  }
  return std::nullopt;
}

Integer rhs_eq1_1(long n) {
  require_n(n);
  return 1;
}

Integer rhs_eq1_2(long n) {
  require_n(n);
  return 1;
}

Integer rhs_eq1_3(long n) {
  require_n(n);
  return n + 1;
}

Integer rhs_eq1_4(long n) {
  require_n(n);
  return fibonacci(2 * n);
}

Integer rhs_eq1_6(long k, long n) {
  require_n(n);
  require_k_beta(k, 0);
  Integer sum = 0;
  for (long s = 0; s <= n; ++s) sum += binomial_int((k - 1) * s + n, n - s);
  return sum;
}

Integer rhs_eq1_7(long k, long n) {
  require_n(n);
  require_k_beta(k, 0);
  Integer sum = 0;
  for (long s = 0; s <= n; ++s) sum += binomial_int(s / (k - 1) + n, n - s);
  return sum;
}

Rational rhs_thm3(std::span<const long> alphas, long n) {
  require_n(n);
  require_length(alphas, n);
  Rational r(vandermonde(alphas));
  for (long i = 0; i < n; ++i) {
    const long a = alphas[i];
    r *= ratio(factorial(i + n) * factorial(2 * a),
               factorial(2 * i) * factorial(a) * factorial(a + n));
  }
  return r;
}

Rational rhs_cor5(std::span<const long> alphas, long n) {
  require_n(n);
  require_length(alphas, n + 1);
  return two_row_corollary(alphas, 2, 0, n);
}

Rational rhs_thm6(std::span<const long> alphas, long k, long beta, long n) {
  require_n(n);
  require_k_beta(k, beta);
  require_length(alphas, n);
  Rational r(vandermonde(alphas));
  for (long i = 0; i < n; ++i) {
    const long a = alphas[i];
    r *= ratio(factorial((k - 1) * i + beta + n) * factorial(k * a + beta),
               factorial(k * i + beta) * factorial(a) * factorial((k - 1) * a + beta + n));
  }
  return r;
}

Rational rhs_eq43(std::span<const long> alphas, long k, long beta, long n) {
  require_n(n);
  if (k < 2) throw DomainError("k must be >= 2, got " + std::to_string(k));
  if (beta < 0) throw DomainError("beta must be >= 0, got " + std::to_string(beta));
  require_length(alphas, n, 1);
  Rational r = ratio(factorial(beta), factorial(beta + n)) * Rational(vandermonde(alphas));
  for (long i = 0; i < n; ++i) {
    const long a = alphas[i];
    r *= ratio(factorial((k - 1) * i + beta + n) * factorial(k * a + beta),
               factorial(k * i + beta) * factorial(a - 1) * factorial((k - 1) * a + beta + n));
  }
  return r;
}

Rational rhs_cor7(std::span<const long> alphas, long k, long beta, long n) {
  require_n(n);
  require_k_beta(k, beta);
  require_length(alphas, n + 1);
  return two_row_corollary(alphas, k, beta, n);
}

Integer rhs_thm9(long k, long beta, long n) {
  require_n(n, 0);
  require_k_beta(k, beta);
  Integer sum = 0;
  for (long s = 0; s <= n; ++s) sum += binomial_int((s + beta) / (k - 1) + n, n - s);
  return sum;
}

Rational rhs_prop8(long a, long b, long c, std::span<const long> alphas, long n) {
  require_n(n);
  if (alphas.size() != static_cast<std::size_t>(n)) {
    throw DomainError("expected " + std::to_string(n) + " alpha values");
  }
  if (b > c) throw DomainError("prop8 requires b <= c");
  if (alphas[0] < a) throw DomainError("prop8 requires a <= alpha_0");
  if (!std::is_sorted(alphas.begin(), alphas.end())) {
    throw DomainError("prop8 requires nondecreasing alphas");
  }
  Rational r(vandermonde(alphas));
  for (long i = 0; i < n; ++i) {
    const long al = alphas[i];
    r *= ratio(factorial(al + c - a - b), factorial(al - a) * factorial(c - b + i));
  }
  return r;
}

Rational rhs_thm10(Thm10Variant variant, long n) {
  require_n(n);
  const Thm10Shape shape = thm10_shape(variant);
  const long last = shape.through_n ? n : n - 1;
  const Rational base(27, 4);
  Rational r = 1;
  for (long i = 0; i <= last; ++i) {
    Rational term(shape.lead);
    for (const auto& x : shape.rising) term *= pochhammer(x, i);
    for (const auto& y : shape.doubled) term /= pochhammer(y, 2 * i);
    for (long t = 0; t < 2 * i; ++t) term *= base;
    r *= term;
  }
  return r;
}

Rational rhs_lemma1(std::span<const Rational> x, std::span<const Rational> a,
                    std::span<const Rational> b) {
  const std::size_t n = x.size();
  require_n(static_cast<long>(n));
  if (a.size() != n - 1 || b.size() != n - 1) {
    throw DomainError("lemma1 needs " + std::to_string(n - 1) + " A and B values");
  }
  Rational r = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) r *= x[i] - x[j];
  for (std::size_t i = 1; i <= n - 1; ++i)
    for (std::size_t j = i; j <= n - 1; ++j) r *= b[i - 1] - a[j - 1];
  return r;
}

}  // namespace hankel
