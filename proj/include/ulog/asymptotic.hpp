#ifndef ULOG_ASYMPTOTIC_HPP
#define ULOG_ASYMPTOTIC_HPP

#include "ulog/param_poly.hpp"
#include "ulog/series.hpp"

#include <string>
#include <vector>

namespace ulog {

/// Polynomial in the formal adjunct ln α with coefficients in Q[s,H,A].
class LogPoly {
public:
    LogPoly() = default;
    LogPoly(const ParamPoly& c);  // NOLINT(google-explicit-constructor)
    LogPoly(const Rational& c) : LogPoly(ParamPoly(c)) {}  // NOLINT
    LogPoly(long c) : LogPoly(ParamPoly(c)) {}  // NOLINT
    explicit LogPoly(std::vector<ParamPoly> by_log_power);

    /// ln α as a LogPoly.
    static LogPoly log_alpha();

    const std::vector<ParamPoly>& coeffs() const noexcept { return c_; }
    /// Coefficient of (ln α)^j.
    ParamPoly operator[](int j) const;
    int log_degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    LogPoly& operator+=(const LogPoly& o);
    LogPoly& operator-=(const LogPoly& o);
    LogPoly& operator*=(const LogPoly& o);
    LogPoly operator-() const;
    friend LogPoly operator+(LogPoly a, const LogPoly& b) { return a += b; }
    friend LogPoly operator-(LogPoly a, const LogPoly& b) { return a -= b; }
    friend LogPoly operator*(const LogPoly& a, const LogPoly& b);
    friend bool operator==(const LogPoly& a, const LogPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LogPoly& a, const LogPoly& b) { return !(a == b); }

    /// d/d(ln α).
    LogPoly d_log() const;
    LogPoly map(const std::function<ParamPoly(const ParamPoly&)>& f) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<ParamPoly> c_;
};

template <>
struct coeff_traits<LogPoly> {
    static bool is_zero(const LogPoly& c) { return c.is_zero(); }
    static LogPoly inverse(const LogPoly& c) {
        if (c.log_degree() != 0) throw DomainError("leading coefficient " + c.to_string() + " is not a unit");
        return LogPoly(coeff_traits<ParamPoly>::inverse(c[0]));
    }
    static std::string str(const LogPoly& c) { return c.to_string(); }
};

/// α^e · Σ_{k=0..N} c_k α^{−k}: an expansion at α = ∞ whose exponent e is a
/// parameter polynomial (usually a linear form in s, H) and whose coefficients
/// may carry powers of ln α.
class AsymptoticSeries {
public:
    AsymptoticSeries() = default;
    AsymptoticSeries(ParamPoly exponent, Series<LogPoly> coeffs);
    AsymptoticSeries(ParamPoly exponent, const PSeries& coeffs);

    /// α^e exactly.
    static AsymptoticSeries power(const ParamPoly& e);

    const ParamPoly& exponent() const noexcept { return exponent_; }
    /// Coefficients as a series in the variable "1/a".
    const Series<LogPoly>& body() const noexcept { return body_; }
    int order() const noexcept { return body_.order(); }
    LogPoly operator[](int k) const { return body_[k]; }
    /// The ln α-free part of coefficient k.
    ParamPoly plain(int k) const { return body_[k][0]; }

    AsymptoticSeries truncated(int n) const { return {exponent_, body_.truncated(n)}; }

    friend AsymptoticSeries operator*(const AsymptoticSeries& a, const AsymptoticSeries& b);
    /// Requires the leading coefficient of b to be a rational unit.
    friend AsymptoticSeries operator/(const AsymptoticSeries& a, const AsymptoticSeries& b);
    /// Requires the exponents to differ by an integer; the result takes the larger exponent.
    friend AsymptoticSeries operator+(const AsymptoticSeries& a, const AsymptoticSeries& b);
    friend AsymptoticSeries operator-(const AsymptoticSeries& a, const AsymptoticSeries& b);
    AsymptoticSeries scaled(const ParamPoly& c) const { return {exponent_, body_.scaled(LogPoly(c))}; }

    /// Same exponent, same known coefficients and order.
    friend bool operator==(const AsymptoticSeries& a, const AsymptoticSeries& b) {
        return a.exponent_ == b.exponent_ && a.body_ == b.body_;
    }

    AsymptoticSeries specialize(Sym sym, const Rational& v) const;
    AsymptoticSeries substitute(Sym sym, const ParamPoly& v) const;

    std::string to_string(int max_terms = 8) const;

private:
    ParamPoly exponent_;
    Series<LogPoly> body_ = Series<LogPoly>(std::vector<LogPoly>{}, kExact, "1/a");
};

/// log(a) = e·ln α + log(Σ c_k α^{−k}); requires leading coefficient 1.
AsymptoticSeries log(const AsymptoticSeries& a);
AsymptoticSeries d_dalpha(const AsymptoticSeries& a);
AsymptoticSeries d_ds(const AsymptoticSeries& a);

/// Coefficientwise comparison of the common known range, aligning exponents
/// that differ by an integer. Returns the first index (in powers of α^{-1}
/// relative to the larger exponent) that differs, or -1.
int first_difference(const AsymptoticSeries& a, const AsymptoticSeries& b, int depth);

/// Laurent polynomial in α with rational coefficients viewed as an
/// expansion at infinity: leading exponent deg(p) - shift.
AsymptoticSeries from_alpha_polynomial(const QSeries& p, int depth, int shift = 0);

} // namespace ulog

#endif
