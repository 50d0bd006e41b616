#ifndef ULOG_PARAM_POLY_HPP
#define ULOG_PARAM_POLY_HPP

#include "ulog/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace ulog {

/// The formal parameters that may appear in symbolic coefficients.
/// Adding a symbol is a code-level change (extend the enum and kSymbolCount).
enum class Sym : std::uint8_t { s = 0, H = 1, A = 2 };
inline constexpr std::size_t kSymbolCount = 3;

const char* symbol_name(Sym sym);

/// Polynomial in {s, H, A} with rational coefficients. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class ParamPoly {
public:
    using Monomial = std::array<std::uint16_t, kSymbolCount>;
    using Terms = std::map<Monomial, Rational>;

    ParamPoly() = default;
    ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants embed implicitly
    ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT

    static ParamPoly symbol(Sym sym);
    static ParamPoly monomial(const Rational& c, const Monomial& m);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Throws DomainError unless the polynomial is a constant.
    Rational constant_value() const;
    /// Coefficient of the monomial 1 (zero when absent).
    Rational constant_term() const;

    int degree(Sym sym) const;
    int total_degree() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);
    ParamPoly operator-() const;

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
    friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    ParamPoly pow(unsigned n) const;
    ParamPoly derivative(Sym sym) const;
    ParamPoly substitute(Sym sym, const ParamPoly& value) const;
    ParamPoly specialize(Sym sym, const Rational& value) const { return substitute(sym, ParamPoly(value)); }
    /// Exact division by the symbol; throws DomainError if some term lacks it.
    ParamPoly divide_by_symbol(Sym sym) const;
    /// Division by a nonzero rational scalar.
    ParamPoly divided(const Rational& c) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

/// Generalized binomial coefficient top·(top−1)···(top−k+1)/k!.
ParamPoly binomial(const ParamPoly& top, long k);
/// Falling factorial top·(top−1)···(top−k+1).
ParamPoly falling(const ParamPoly& top, long k);

} // namespace ulog

#endif
