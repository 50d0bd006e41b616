#ifndef ULOG_NCPOLY_HPP
#define ULOG_NCPOLY_HPP

// Noncommutative polynomials over the letters σ, D, E, λ, λ^{-1} and the two
// rewriting rules that generate the operators T_n and T_n^ℓ.
//
// Every polynomial handled here has the shape Σ_i α_i E D^i, where α_i is a
// combination of words without E. σ stays an abstract letter; turning words
// into differential operators is diffop's job.

#include "ulog/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ulog {

enum class Letter : std::uint8_t { Sigma, D, E, Lambda, LambdaInv };

using NCWord = std::vector<Letter>;

class NCPoly {
public:
    using Terms = std::map<NCWord, Rational>;

    NCPoly() = default;
    static NCPoly word(NCWord w, const Rational& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    /// Concatenation product.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const Rational& c, const NCPoly& a);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Drops every λ and λ^{-1} letter (the specialization λ = 1).
    NCPoly without_lambda() const;

    std::string to_string() const;

private:
    void add(const NCWord& w, const Rational& c);
    Terms terms_;
};

/// The coefficients α_0..α_k of Σ α_i E D^i. Throws DomainError when some word
/// has no E, more than one E, anything other than D after E, or an E inside
/// a prefix (the closure property: coefficients are words in σ, D, λ, λ^{-1}).
std::vector<NCPoly> shape_coefficients(const NCPoly& p);

/// Reassembles Σ α_i E D^i.
NCPoly from_shape(const std::vector<NCPoly>& alphas);

/// E D^i -> σD^{i+2}E/((i+1)(i+2)) - σDED^{i+1}/(i+1) + σED^{i+2}/(i+2),
/// applied after each coefficient α_i.
NCPoly nu_step(const NCPoly& p);

/// E D^i -> (σλ^{-1}DλD^{i+1}/(i+1) - σD^{i+2}/(i+2)) E
///          - σλ^{-1}DλED^{i+1}/(i+1) + σED^{i+2}/(i+2).
NCPoly nu_bar_step(const NCPoly& p);

/// ν^n E (or ν̄^n E).
NCPoly nu_power(int n, bool with_lambda = false);

/// α_0 of ν^n E by multiplying the row (α_0, ..., α_k) by the banded
/// (k+1) x (k+3) matrix with row i = (σD^{i+2}/((i+1)(i+2)), 0, ..,
/// -σD/(i+1) at column i+1, σ/(i+2) at column i+2). Returns the whole row.
std::vector<NCPoly> matrix_row(int n);

std::string letter_name(Letter l);

} // namespace ulog

#endif
