#ifndef ULOG_SHEFFER_HPP
#define ULOG_SHEFFER_HPP

// Sheffer sequences τ_n = ℓ(D) p_n, their eigen-operator, the resolvent
// identity for α T τ_{s-1}/τ_s, T_n^ℓ, and the Bernoulli logarithm experiment.

#include "ulog/asymptotic.hpp"
#include "ulog/diffop.hpp"
#include "ulog/family.hpp"
#include "ulog/graded.hpp"
#include "ulog/numeric.hpp"
#include "ulog/stirling.hpp"

#include <string>
#include <vector>

namespace ulog {

struct ShefferFamily {
    BinomialFamily fam;
    /// ℓ(x) = 1 + O(x).
    QSeries ell;
    /// τ_0..τ_N as exact polynomials in "a".
    std::vector<QSeries> tau_polys;
    /// ℓ(d/dα) p_s(α) with symbolic s, to the depth requested.
    AsymptoticSeries tau_symbolic;
};

/// τ_n = n! [x^n] ℓ(φ(x)) e^{αφ(x)}; tau_symbolic to depth N.
/// Throws DomainError unless ℓ(0) = 1.
ShefferFamily tau_seq(const BinomialFamily& fam, const QSeries& ell, int n);

/// Σ τ_n x^n/n! against ℓ(φ) e^{αφ} to order n, coefficientwise in α.
bool generating_function_check(const ShefferFamily& sf, int n);

/// tau_symbolic at s = n against τ_n for n <= n_max.
bool symbolic_specializes(const ShefferFamily& sf, int n_max);

/// c(D) applied to a polynomial in α.
QSeries apply_d_series(const QSeries& c, const QSeries& poly);

/// θ = ℓ(D) α τ_f(D) ℓ(D)^{-1} on polynomials; θ τ_n = n τ_n for n <= n_max.
/// Throws TruncationError if the series are too short for deg τ_n.
bool theta_check(const ShefferFamily& sf, int n_max);

struct ResolventReport {
    bool passed = false;
    AsymptoticSeries lhs;
    AsymptoticSeries rhs;
    int first_diff = -1;
};

/// α T τ_{s-1}/τ_s (direct) against
/// (1 - sα^{-1}ℓ(ω)Lℓ(ω)^{-1} + α^{-1}d/dω)^{-1} T(α,ω(x)) ℓ(ω(x)) f'(ω(x)) |_{x=0}.
ResolventReport sheffer_resolvent_check(const ShefferFamily& sf, const AlphaDOperator& t, int s, int depth);

struct CandidateReport {
    std::string name;
    std::vector<ParamPoly> lhs;
    std::vector<CoefficientDiff> diffs;
    int matching = 0;
};

struct BernoulliReport {
    int depth = 0;
    std::vector<ParamPoly> rhs;
    std::vector<CandidateReport> candidates;
    std::string note;
};

/// (1/s) ln(B_s α^{-s}) against ln(1 + α^{-1}d/dx - sα^{-1}(x/(e^x-1)) L ((e^x-1)/x)) x/(e^x-1) |_{x=0},
/// the operator side taken literally. B_s is read two ways: ℓ(d/dα) p_s for
/// f = e^x-1, ℓ = x/(e^x-1), and Σ binom(s,k) B_k α^{s-k}.
BernoulliReport bernoulli_log_experiment(int depth);

struct TnEllSample {
    int s = 0;
    HighPrec value;
    HighPrec error;
};

struct TnEllTrend {
    HighPrec target;
    std::vector<TnEllSample> samples;
    bool decreasing = false;
};

/// s (τ_s'(s/α)/τ_s(s/α) - ω(α)) against -α (T_1^ℓ ω)(α) at the given s.
TnEllTrend tn_ell_trend(const ShefferFamily& sf, const Rational& alpha, const std::vector<int>& s_values);

/// f = e^x - 1, ℓ = x/(e^x - 1) to the given order.
ShefferFamily bernoulli_type(int order, int n);

} // namespace ulog

#endif
