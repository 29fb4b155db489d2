#ifndef LATPATH_RATIONAL_HPP
#define LATPATH_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace latpath {

// Exact scalars. mpq_class keeps values canonical after every arithmetic
// operation; values built from a numerator/denominator pair go through
// make_rational so they are canonical too.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "p", "-p" and "p/q" (q != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

// binom(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(long n, long k);

Integer catalan_number(long n);

}  // namespace latpath

#endif  // LATPATH_RATIONAL_HPP
