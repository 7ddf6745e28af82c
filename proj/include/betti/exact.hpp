#pragma once

// Arbitrary-precision scalars. Integer and Rational are GMP's C++ classes;
// mpq_class keeps every value in lowest terms with a positive denominator
// once canonicalized, which make_rational guarantees.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace betti {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form. Throws Errc::DivisionByZero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// 2^-bits as an exact rational.
Rational power_of_two_inverse(unsigned bits);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
int sign(const Integer& z);
int sign(const Rational& q);

/// floor(sqrt(n)) by integer Newton iteration. Throws Errc::NegativeInput.
Integer integer_sqrt(const Integer& n);

/// Decimal rendering, e.g. "-42".
std::string to_string(const Integer& z);

/// Always "p/q", including integers ("23/1").
std::string to_fraction_string(const Rational& q);

/// Parses a decimal integer; throws Errc::InvalidArgument on junk.
Integer parse_integer(const std::string& text);

}  // namespace betti
