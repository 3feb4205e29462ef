#pragma once

#include <gmpxx.h>

#include "hankel/errors.hpp"

#include <string>
#include <string_view>

namespace hankel {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact fraction; GMP keeps arithmetic results canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;

/// n! for n >= 0.
Integer factorial(long n);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial_int(long n, long k);

/// Generalised binomial x(x-1)...(x-k+1)/k! for any rational x.
Rational binomial_gen(const Rational& x, long k);

/// Rising factorial a(a+1)...(a+i-1); 1 when i == 0.
Rational pochhammer(const Rational& a, long i);

/// Builds p/q in lowest terms. Throws DomainError when q == 0.
Rational make_rational(const Integer& p, const Integer& q);

bool is_integral(const Rational& r);

/// Numerator of an integral rational; throws DomainError otherwise.
Integer to_integer(const Rational& r);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p" or "p/q" (optional leading sign on p). Throws
/// std::invalid_argument on malformed text and DomainError on q == 0.
Rational parse_rational(std::string_view text);

}  // namespace hankel
