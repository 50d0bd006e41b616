#include "ulog/rational.hpp"

#include "ulog/errors.hpp"

#include <cctype>

namespace ulog {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view t = trim(text);
    auto slash = t.find('/');
    std::string_view num = slash == std::string_view::npos ? t : t.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'", 1, 1);
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer p(n, 10), q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, 1);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return to_fraction_string(q);
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational binomial(const Rational& top, long k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= (top - i);
    r /= Rational(factorial(k));
    return r;
}

} // namespace ulog
