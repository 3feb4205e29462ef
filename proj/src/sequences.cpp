#include "hankel/sequences.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace hankel {

namespace {

// Process-wide memo tables. Values are immutable once inserted, so callers
// only ever observe pure-function behaviour.
template <typename Key>
class Memo {
 public:
  template <typename Compute>
  Integer get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Integer value = compute();
    std::lock_guard lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Integer> table_;
};

Memo<long>& catalan_memo() {
  static Memo<long> memo;
  return memo;
}

Memo<std::pair<long, long>>& gen_catalan_memo() {
  static Memo<std::pair<long, long>> memo;
  return memo;
}

// l/(3m+o) * C(3m+o, m+t)
Rational ternary_term(long l, long o, long t, long m) {
  const long top = 3 * m + o;
  return make_rational(Integer(l) * binomial_int(top, m + t), Integer(top));
}

}  // namespace

std::string_view to_string(Thm10Variant v) {
  switch (v) {
    case Thm10Variant::E5_2: return "5.2";
    case Thm10Variant::E5_3: return "5.3";
    case Thm10Variant::E5_4: return "5.4";
    case Thm10Variant::E5_5: return "5.5";
    case Thm10Variant::E5_6: return "5.6";
    case Thm10Variant::E5_7: return "5.7";
    case Thm10Variant::E5_8: return "5.8";
    case Thm10Variant::E5_9: return "5.9";
    case Thm10Variant::E5_10: return "5.10";
    case Thm10Variant::E5_11: return "5.11";
  }
  return "?";
}

std::optional<Thm10Variant> parse_thm10_variant(std::string_view text) {
  for (auto v : kAllThm10Variants) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

std::string describe(const SequenceSpec& spec) {
  switch (spec.kind) {
    case SequenceKind::Catalan: return "catalan";
    case SequenceKind::GenCatalan: return "gen_catalan(k=" + std::to_string(spec.k) + ")";
    case SequenceKind::Fibonacci: return "fibonacci";
    case SequenceKind::Thm10A: return "thm10_a";
    case SequenceKind::Thm10B: return "thm10_b";
    case SequenceKind::Thm10C: return "thm10_c";
  }
  return "?";
}

Integer catalan(long n) {
  if (n < 0) throw DomainError("catalan: negative index " + std::to_string(n));
  return catalan_memo().get(n, [n] {
    return to_integer(make_rational(binomial_int(2 * n, n), Integer(n + 1)));
  });
}

Integer gen_catalan(long n, long k) {
  if (k < 2) throw DomainError("gen_catalan: k must be >= 2, got " + std::to_string(k));
  if (n < 0) throw DomainError("gen_catalan: negative index " + std::to_string(n));
  return gen_catalan_memo().get({n, k}, [n, k] {
    const long q = n / (k - 1);
    Rational v = make_rational(Integer(n - (k - 1) * q + 1), Integer(n + q + 1)) *
                 Rational(binomial_int(n + q + 1, n + 1));
    return to_integer(v);
  });
}

Integer fibonacci(long m) {
  if (m < 0) throw DomainError("fibonacci: negative index " + std::to_string(m));
  Integer prev = 1, cur = 1;
  for (long i = 1; i < m; ++i) {
    Integer next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational thm10_sequence(Thm10Sequence variant, long m) {
  if (m < 0) throw DomainError("thm10_sequence: negative index " + std::to_string(m));
  switch (variant) {
    case Thm10Sequence::A: return m == 0 ? Rational(-2) : ternary_term(1, 1, 0, m);
    case Thm10Sequence::B: return m == 0 ? Rational(10) : ternary_term(2, 2, 0, m);
    case Thm10Sequence::C: return m == 0 ? Rational(7, 2) : ternary_term(2, 1, 1, m);
  }
  return 0;
}

Rational thm10_hankel_term(Thm10Variant variant, long m) {
  switch (variant) {
    case Thm10Variant::E5_2: return ternary_term(1, 1, 0, m);
    case Thm10Variant::E5_3: return ternary_term(1, 4, 1, m);
    case Thm10Variant::E5_4: return ternary_term(1, 2, 1, m);
    case Thm10Variant::E5_5: return ternary_term(1, 5, 2, m);
    case Thm10Variant::E5_6: return ternary_term(2, 1, 1, m);
    case Thm10Variant::E5_7: return ternary_term(2, 4, 2, m);
    case Thm10Variant::E5_8: return thm10_sequence(Thm10Sequence::A, m);
    case Thm10Variant::E5_9: return thm10_sequence(Thm10Sequence::B, m);
    case Thm10Variant::E5_10: return ternary_term(2, 5, 1, m);
    case Thm10Variant::E5_11: return thm10_sequence(Thm10Sequence::C, m);
  }
  return 0;
}

Rational sequence_value(const SequenceSpec& spec, long m) {
  switch (spec.kind) {
    case SequenceKind::Catalan: return Rational(catalan(m));
    case SequenceKind::GenCatalan: return Rational(gen_catalan(m, spec.k));
    case SequenceKind::Fibonacci: return Rational(fibonacci(m));
    case SequenceKind::Thm10A: return thm10_sequence(Thm10Sequence::A, m);
    case SequenceKind::Thm10B: return thm10_sequence(Thm10Sequence::B, m);
    case SequenceKind::Thm10C: return thm10_sequence(Thm10Sequence::C, m);
  }
  return 0;
}

}  // namespace hankel
