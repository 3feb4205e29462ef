#include "hankel/arith.hpp"

#include <cctype>

namespace hankel {

Integer factorial(long n) {
  if (n < 0) {
    throw DomainError("factorial: negative argument " + std::to_string(n));
  }
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial_int(long n, long k) {
  if (n < 0) {
    throw DomainError("binomial_int: negative upper index " + std::to_string(n));
  }
  if (k < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational binomial_gen(const Rational& x, long k) {
  if (k < 0) {
    throw DomainError("binomial_gen: negative lower index " + std::to_string(k));
  }
  Rational num = 1;
  for (long t = 0; t < k; ++t) num *= x - t;
  return num / Rational(factorial(k));
}

Rational pochhammer(const Rational& a, long i) {
  if (i < 0) {
    throw DomainError("pochhammer: negative length " + std::to_string(i));
  }
  Rational r = 1;
  for (long t = 0; t < i; ++t) r *= a + t;
  return r;
}

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

Integer to_integer(const Rational& r) {
  if (!is_integral(r)) {
    throw DomainError("expected an integer, got " + to_string(r));
  }
  return r.get_num();
}

std::string to_string(const Rational& r) { return r.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

namespace {

Integer parse_integer(std::string_view text, bool allow_sign) {
  std::size_t pos = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  text = first == std::string_view::npos ? std::string_view{} : text.substr(first, text.find_last_not_of(" \t") - first + 1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  Integer p = parse_integer(text.substr(0, slash), true);
  Integer q = parse_integer(text.substr(slash + 1), false);
  return make_rational(p, q);
}

}  // namespace hankel
