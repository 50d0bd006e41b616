#include "ulog/numeric.hpp"

#include <sstream>

namespace ulog {

HighPrec to_high(const Rational& q) {
    HighPrec r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

HighPrec log_rational(const Rational& q) {
    if (q <= 0) throw DomainError("log of a non-positive rational");
    HighPrec num, den;
    mpfr_set_z(num.backend().data(), q.get_num_mpz_t(), MPFR_RNDN);
    mpfr_set_z(den.backend().data(), q.get_den_mpz_t(), MPFR_RNDN);
    return boost::multiprecision::log(num) - boost::multiprecision::log(den);
}

std::string to_decimal(const HighPrec& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

SeriesValue evaluate(const QSeries& s, const Rational& x, double tolerance) {
    if (s.is_exact()) {
        Rational acc = 0;
        for (int k = s.degree(); k >= 0; --k) acc = acc * x + s.coeffs()[static_cast<std::size_t>(k)];
        return {to_high(acc), HighPrec(0)};
    }
    const int n = s.order();
    const HighPrec hx = to_high(x);
    HighPrec sum = 0, pw = 1, tail = 0;
    const int tail_from = n - std::max(4, (n + 1) / 5);
    for (int k = 0; k <= n; ++k) {
        const HighPrec term = to_high(s[k]) * pw;
        sum += term;
        if (k > tail_from) tail = std::max(tail, HighPrec(abs(term)));
        pw *= hx;
    }
    const HighPrec scale = std::max(HighPrec(1), HighPrec(abs(sum)));
    if (tail > HighPrec(tolerance) * scale)
        throw DomainError("point " + to_string(x) + " lies outside the safe evaluation range of a " + s.var() +
                          "-series truncated at order " + std::to_string(n) + " (trailing term " +
                          to_decimal(tail, 6) + ")");
    return {sum, tail};
}

} // namespace ulog
