#ifndef ULOG_NUMERIC_HPP
#define ULOG_NUMERIC_HPP

// High-precision decimal evaluation of exact quantities. Used only for trend
// summaries of limit statements; nothing computed here feeds back into the
// exact pipelines.

#include "ulog/rational.hpp"
#include "ulog/series.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace ulog {

/// 100 significant decimal digits.
using HighPrec = boost::multiprecision::mpfr_float_100;

HighPrec to_high(const Rational& q);
/// Natural log of a positive rational, correct to working precision even
/// when numerator and denominator are huge.
HighPrec log_rational(const Rational& q);
std::string to_decimal(const HighPrec& x, int digits = 30);

struct SeriesValue {
    HighPrec value;
    /// Largest |c_k x^k| among the trailing known terms.
    HighPrec tail;
};

/// Sums the known terms of `s` at `x`. Throws DomainError when the trailing
/// terms are not negligible (|term| > tolerance), i.e. x lies outside the
/// range where the truncated series is a reliable value.
SeriesValue evaluate(const QSeries& s, const Rational& x, double tolerance = 1e-40);

} // namespace ulog

#endif
