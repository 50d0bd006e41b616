#include "ulog/propositions.hpp"

#include "ulog/diffop.hpp"
#include "ulog/xops.hpp"

#include <map>

namespace ulog {

PSeries resolvent_rational_action(const PSeries& g, const ParamPoly& p) {
    if (!g.is_exact()) throw DomainError("(1 - pL)^{-1} acts here on polynomials only");
    std::vector<ParamPoly> out(static_cast<std::size_t>(g.stored()));
    for (int j = 0; j < g.stored(); ++j) {
        const ParamPoly& gj = g.coeffs()[static_cast<std::size_t>(j)];
        if (gj.is_zero()) continue;
        ParamPoly pw(1);
        for (int i = j; i >= 0; --i) {
            out[static_cast<std::size_t>(i)] += gj * pw;
            pw *= p;
        }
    }
    return PSeries::exact(std::move(out), g.var());
}

namespace {

ParamPoly d_dp(const ParamPoly& c, int times) {
    ParamPoly r = c;
    for (int k = 0; k < times; ++k) r = r.derivative(Sym::s);
    return r;
}

// Σ_i c_i p^i with p the symbol s.
ParamPoly at_p(const std::vector<ParamPoly>& c) {
    const ParamPoly p = ParamPoly::symbol(Sym::s);
    ParamPoly acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * p + *it;
    return acc;
}

} // namespace

IdentitySides shift_derivative_identity(const PSeries& f, int n) {
    if (!f.is_exact()) throw DomainError("shift/derivative identity is checked on polynomials");
    const ParamPoly p = ParamPoly::symbol(Sym::s);
    const PSeries h = resolvent_rational_action(zero_derivative(f), p);
    std::vector<ParamPoly> hn;
    for (const auto& c : h.coeffs()) hn.push_back(d_dp(c, n));

    std::vector<ParamPoly> fn;
    for (const auto& c : f.coeffs()) fn.push_back(d_dp(c, n + 1));
    const ParamPoly rhs = (d_dp(at_p(f.coeffs()), n + 1) - at_p(fn)).divided(Rational(n + 1));
    return {at_p(hn), rhs};
}

namespace {

// Polynomials in ε_1..ε_n, t_1..t_n with coefficients in Q[[s]]; every
// ε-exponent above 2 is dropped on the fly.
using Key = std::vector<int>;
using EpsPoly = std::map<Key, QSeries>;

void add_into(EpsPoly& acc, const Key& k, const QSeries& c) {
    auto it = acc.find(k);
    if (it == acc.end()) acc.emplace(k, c);
    else it->second = it->second + c;
}

EpsPoly multiply(const EpsPoly& a, const EpsPoly& b, int n) {
    EpsPoly r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            Key k(ka.size());
            bool keep = true;
            for (std::size_t i = 0; i < k.size(); ++i) {
                k[i] = ka[i] + kb[i];
                if (static_cast<int>(i) < n && k[i] > 2) keep = false;
            }
            if (keep) add_into(r, k, ca * cb);
        }
    return r;
}

// Σ_j u^{(j)}(s) δ^j / j!, δ a pure monomial sum with unit coefficients.
EpsPoly taylor_shift(const QSeries& u, const EpsPoly& delta, int n, int max_power) {
    EpsPoly acc;
    EpsPoly pw{{Key(static_cast<std::size_t>(2 * n), 0), QSeries::constant(1, kExact, "s")}};
    QSeries du = u;
    Rational fac = 1;
    for (int j = 0; j <= max_power; ++j) {
        if (j > 0) {
            du = derive(du);
            fac *= j;
            pw = multiply(pw, delta, n);
        }
        for (const auto& [k, c] : pw) add_into(acc, k, (c * du).scaled(1 / fac));
    }
    return acc;
}

} // namespace

QSeries tn_integral(const BinomialFamily& fam, int n, const QSeries& g_in) {
    if (n < 1) throw DomainError("the integral form needs n >= 1");
    const QSeries sigma = letter_values(fam, "s").sigma;
    const QSeries g = g_in.renamed("s");
    const auto size = static_cast<std::size_t>(2 * n);

    auto delta = [&](int k) {
        EpsPoly d;
        for (int i = 1; i <= k; ++i) {
            Key key(size, 0);
            key[static_cast<std::size_t>(i - 1)] = 1;
            for (int j = i; j <= k; ++j) key[static_cast<std::size_t>(n + j - 1)] += 1;
            d.emplace(key, QSeries::constant(1, kExact, "s"));
        }
        return d;
    };

    EpsPoly prod{{Key(size, 0), QSeries::constant(1, kExact, "s")}};
    for (int k = 1; k < n; ++k) prod = multiply(prod, taylor_shift(sigma, delta(k), n, 2 * k), n);
    prod = multiply(prod, taylor_shift(g, delta(n), n, 2 * n), n);

    QSeries acc(std::vector<Rational>{}, kExact, "s");
    for (const auto& [k, c] : prod) {
        bool top = true;
        for (int i = 0; i < n; ++i) top = top && k[static_cast<std::size_t>(i)] == 2;
        if (!top) continue;
        Rational w = Rational(1 << n);
        for (int i = 0; i < n; ++i) {
            const int a = k[static_cast<std::size_t>(n + i)];
            if (a == 0) throw DomainError("divergent t-integral: integrand t^{-1} in variable t_" + std::to_string(i + 1));
            w /= a;
        }
        acc = acc + c.scaled(w);
    }
    return sigma * acc;
}

} // namespace ulog
