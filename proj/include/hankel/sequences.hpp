#pragma once

#include "hankel/arith.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hankel {

/// The ten Hankel evaluations over ternary-tree style numbers
/// l/(3m+o) * C(3m+o, m+t), labelled 5.2 to 5.11 as in the Thm10 ids.
enum class Thm10Variant { E5_2, E5_3, E5_4, E5_5, E5_6, E5_7, E5_8, E5_9, E5_10, E5_11 };

inline constexpr Thm10Variant kAllThm10Variants[] = {
    Thm10Variant::E5_2, Thm10Variant::E5_3, Thm10Variant::E5_4, Thm10Variant::E5_5,
    Thm10Variant::E5_6, Thm10Variant::E5_7, Thm10Variant::E5_8, Thm10Variant::E5_9,
    Thm10Variant::E5_10, Thm10Variant::E5_11};

/// "5.2" ... "5.11".
std::string_view to_string(Thm10Variant v);
std::optional<Thm10Variant> parse_thm10_variant(std::string_view text);

/// The three sequences with a modified zeroth term (a_m, b_m, c_m).
enum class Thm10Sequence { A, B, C };

enum class SequenceKind { Catalan, GenCatalan, Fibonacci, Thm10A, Thm10B, Thm10C };

struct SequenceSpec {
  SequenceKind kind = SequenceKind::Catalan;
  long k = 2;  // only read for GenCatalan

  static SequenceSpec catalan() { return {SequenceKind::Catalan, 2}; }
  static SequenceSpec gen_catalan(long k) { return {SequenceKind::GenCatalan, k}; }
  static SequenceSpec fibonacci() { return {SequenceKind::Fibonacci, 2}; }
};

std::string describe(const SequenceSpec& spec);

/// C_n = C(2n, n)/(n+1).
Integer catalan(long n);

/// C_{n,k} = (n - (k-1)q + 1)/(n + q + 1) * C(n + q + 1, n + 1), q = floor(n/(k-1)).
/// Requires k >= 2.
Integer gen_catalan(long n, long k);

/// F_0 = F_1 = 1, F_m = F_{m-1} + F_{m-2}.
Integer fibonacci(long m);

/// a_m, b_m, c_m with their exceptional zeroth terms (-2, 10, 7/2).
Rational thm10_sequence(Thm10Sequence variant, long m);

/// The m-th term of the sequence whose Hankel matrix is the given variant.
Rational thm10_hankel_term(Thm10Variant variant, long m);

/// Term m of any sequence kind, as a rational.
Rational sequence_value(const SequenceSpec& spec, long m);

}  // namespace hankel
