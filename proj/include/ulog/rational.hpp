#ifndef ULOG_RATIONAL_HPP
#define ULOG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ulog {

// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every arithmetic operation, which is exactly the
// invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Lossless "num/den" form (the denominator is always printed).
std::string to_fraction_string(const Rational& q);

/// Human-readable form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Integer factorial(long n);
Rational binomial(const Rational& top, long k);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace ulog

#endif
