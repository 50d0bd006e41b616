#ifndef ULOG_SERIES_HPP
#define ULOG_SERIES_HPP

// Truncated formal power series over an exact coefficient domain.
//
// A Series stores c_0..c_k and an order N >= k: every coefficient with index
// <= N is known (those past k are zero) and nothing is known beyond N.
// Polynomials carry order kExact. Every operation computes the order its
// result is guaranteed to, and reading past it throws TruncationError.

#include "ulog/errors.hpp"
#include "ulog/param_poly.hpp"
#include "ulog/rational.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ulog {

inline constexpr int kExact = INT_MAX / 4;

/// Saturating order arithmetic: anything reaching kExact stays exact.
constexpr int order_add(int a, int b) {
    if (a >= kExact || b >= kExact) return kExact;
    return std::min(a + b, kExact);
}

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
    static bool is_zero(const Rational& c) { return c == 0; }
    static Rational inverse(const Rational& c) {
        if (c == 0) throw DomainError("division by a series with zero constant term");
        return 1 / c;
    }
    static std::string str(const Rational& c) { return to_string(c); }
};

template <>
struct coeff_traits<ParamPoly> {
    static bool is_zero(const ParamPoly& c) { return c.is_zero(); }
    static ParamPoly inverse(const ParamPoly& c) {
        if (c.is_zero()) throw DomainError("division by a series with zero constant term");
        if (!c.is_constant())
            throw DomainError("constant term " + c.to_string() + " is not a unit in Q[s,H,A]");
        return ParamPoly(1 / c.constant_value());
    }
    static std::string str(const ParamPoly& c) { return c.to_string(); }
};

template <class C>
class Series {
public:
    using coeff_type = C;

    /// The exact zero polynomial.
    Series() = default;

    Series(std::vector<C> coeffs, int order, std::string var = "x")
        : c_(std::move(coeffs)), order_(order), var_(std::move(var)) {
        if (order_ < -1) order_ = -1;
        normalize();
    }

    static Series exact(std::vector<C> coeffs, std::string var = "x") {
        return Series(std::move(coeffs), kExact, std::move(var));
    }
    static Series constant(const C& c, int order = kExact, std::string var = "x") {
        return Series(std::vector<C>{c}, order, std::move(var));
    }
    static Series monomial(const C& c, int power, int order = kExact, std::string var = "x") {
        std::vector<C> v(static_cast<std::size_t>(power) + 1, C(0));
        v.back() = c;
        return Series(std::move(v), order, std::move(var));
    }
    /// The series x in the given variable.
    static Series identity(int order = kExact, std::string var = "x") {
        return monomial(C(1), 1, order, std::move(var));
    }

    int order() const noexcept { return order_; }
    bool is_exact() const noexcept { return order_ >= kExact; }
    const std::string& var() const noexcept { return var_; }
    /// Number of stored coefficients (trailing zeros are trimmed).
    int stored() const noexcept { return static_cast<int>(c_.size()); }
    const std::vector<C>& coeffs() const noexcept { return c_; }
    /// Degree of the stored part; -1 for zero.
    int degree() const noexcept { return stored() - 1; }

    C operator[](int k) const {
        if (k < 0) return C(0);
        if (k > order_)
            throw TruncationError("coefficient " + std::to_string(k) + " of " + var_ +
                                  "-series requested beyond its order " + std::to_string(order_));
        return k < stored() ? c_[static_cast<std::size_t>(k)] : C(0);
    }

    /// Index of the first nonzero coefficient; order+1 if none is known.
    int valuation() const noexcept {
        for (int k = 0; k < stored(); ++k)
            if (!coeff_traits<C>::is_zero(c_[static_cast<std::size_t>(k)])) return k;
        return order_ >= kExact ? kExact : order_ + 1;
    }

    bool is_zero() const noexcept { return c_.empty(); }

    Series truncated(int n) const {
        Series r = *this;
        r.order_ = std::min(order_, n);
        r.normalize();
        return r;
    }
    /// Reinterprets the known coefficients as those of a series of the given
    /// order (used to demote polynomials to truncated series). Requires n <= order.
    Series with_order(int n) const {
        if (n > order_)
            throw TruncationError("cannot extend a " + var_ + "-series of order " + std::to_string(order_) +
                                  " to order " + std::to_string(n));
        return truncated(n);
    }
    /// Treats the known coefficients as an exact polynomial.
    Series as_polynomial() const { return Series(c_, kExact, var_); }
    Series renamed(std::string var) const {
        Series r = *this;
        r.var_ = std::move(var);
        return r;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend Series operator+(const Series& a, const Series& b) { return a.combine(b, 1); }
    friend Series operator-(const Series& a, const Series& b) { return a.combine(b, -1); }
    friend Series operator*(const Series& a, const Series& b) { return multiply(a, b); }
    friend Series operator/(const Series& a, const Series& b) { return divide(a, b); }
    friend Series operator*(const Series& a, const C& k) { return a.scaled(k); }
    friend Series operator*(const C& k, const Series& a) { return a.scaled(k); }

    /// Same order and same coefficients.
    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series scaled(const C& k) const {
        Series r = *this;
        for (auto& c : r.c_) c *= k;
        r.normalize();
        return r;
    }

    /// Multiplication by x^k.
    Series shifted_up(int k) const {
        Series r;
        r.var_ = var_;
        r.order_ = order_add(order_, k);
        r.c_.assign(static_cast<std::size_t>(k), C(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        r.normalize();
        return r;
    }
    /// Exact division by x^k; the first k coefficients must be known zeros.
    Series shifted_down(int k) const {
        if (order_ < k - 1 || valuation() < k)
            throw DomainError("series in " + var_ + " is not divisible by " + var_ + "^" + std::to_string(k));
        Series r;
        r.var_ = var_;
        r.order_ = is_exact() ? kExact : order_ - k;
        if (stored() > k) r.c_.assign(c_.begin() + k, c_.end());
        return r;
    }

    template <class F>
    auto map(F&& f) const -> Series<std::decay_t<decltype(f(std::declval<const C&>()))>> {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        std::vector<D> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return Series<D>(std::move(out), order_, var_);
    }

    std::string to_string(int max_terms = 12) const;

private:
    void normalize() {
        if (!is_exact() && static_cast<int>(c_.size()) > order_ + 1)
            c_.resize(static_cast<std::size_t>(order_ + 1));
        while (!c_.empty() && coeff_traits<C>::is_zero(c_.back())) c_.pop_back();
    }

    void check_var(const Series& o) const {
        if (var_ != o.var_)
            throw MismatchError("series variables differ: " + var_ + " vs " + o.var_);
    }

    Series combine(const Series& b, int sign) const {
        check_var(b);
        Series r;
        r.var_ = var_;
        r.order_ = std::min(order_, b.order_);
        const int n = std::max(stored(), b.stored());
        r.c_.assign(static_cast<std::size_t>(n), C(0));
        for (int k = 0; k < stored(); ++k) r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
        for (int k = 0; k < b.stored(); ++k) {
            if (sign > 0)
                r.c_[static_cast<std::size_t>(k)] += b.c_[static_cast<std::size_t>(k)];
            else
                r.c_[static_cast<std::size_t>(k)] -= b.c_[static_cast<std::size_t>(k)];
        }
        r.normalize();
        return r;
    }

    static Series multiply(const Series& a, const Series& b) {
        a.check_var(b);
        Series r;
        r.var_ = a.var_;
        r.order_ = std::min(order_add(a.order_, b.valuation()), order_add(b.order_, a.valuation()));
        if (a.is_zero() || b.is_zero()) return r;
        const int top = std::min(r.order_, a.degree() + b.degree());
        r.c_.assign(static_cast<std::size_t>(top) + 1, C(0));
        for (int i = 0; i < a.stored() && i <= top; ++i) {
            const C& ai = a.c_[static_cast<std::size_t>(i)];
            if (coeff_traits<C>::is_zero(ai)) continue;
            for (int j = 0; j < b.stored() && i + j <= top; ++j)
                r.c_[static_cast<std::size_t>(i + j)] += ai * b.c_[static_cast<std::size_t>(j)];
        }
        r.normalize();
        return r;
    }

    static Series divide(const Series& a, const Series& b);

    std::vector<C> c_;
    int order_ = kExact;
    std::string var_ = "x";
};

using QSeries = Series<Rational>;
using PSeries = Series<ParamPoly>;

/// 1/b to the requested order (defaults to b's order).
template <class C>
Series<C> inverse(const Series<C>& b, int order = -1) {
    if (order < 0) order = b.order();
    if (order >= kExact) {
        if (b.degree() > 0) throw DomainError("inverse of a non-constant polynomial needs an explicit truncation");
        return Series<C>::constant(coeff_traits<C>::inverse(b[0]), kExact, b.var());
    }
    order = std::min(order, b.order());
    if (order < 0) throw TruncationError("inverse of a series with unknown constant term");
    const C inv0 = coeff_traits<C>::inverse(b[0]);
    std::vector<C> r(static_cast<std::size_t>(order) + 1, C(0));
    r[0] = inv0;
    for (int n = 1; n <= order; ++n) {
        C acc(0);
        for (int k = 1; k <= n && k < b.stored(); ++k) acc += b.coeffs()[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(n - k)];
        r[static_cast<std::size_t>(n)] = -(acc * inv0);
    }
    return Series<C>(std::move(r), order, b.var());
}

template <class C>
Series<C> Series<C>::divide(const Series& a, const Series& b) {
    a.check_var(b);
    if (b.order_ < 0) throw TruncationError("division by a series with unknown constant term");
    if (coeff_traits<C>::is_zero(b[0])) throw DomainError("division by a series with zero constant term");
    const int order = std::min(a.order_, order_add(b.order_, a.valuation()));
    if (order >= kExact && b.degree() > 0)
        throw DomainError("quotient of polynomials is not a polynomial; truncate first");
    const int inv_order = order >= kExact ? kExact : order;
    return (a * inverse(b, inv_order)).truncated(order);
}

/// Lifts a rational series into the parameter-polynomial domain.
inline PSeries promote(const QSeries& q) {
    return q.map([](const Rational& c) { return ParamPoly(c); });
}

/// Specializes a parameter series back to rationals; every coefficient must
/// become constant.
inline QSeries demote(const PSeries& p) {
    return p.map([](const ParamPoly& c) { return c.constant_value(); });
}

inline PSeries substitute(const PSeries& p, Sym sym, const ParamPoly& value) {
    return p.map([&](const ParamPoly& c) { return c.substitute(sym, value); });
}

/// Termwise d/dx. Order drops by one.
template <class C>
Series<C> derive(const Series<C>& u) {
    std::vector<C> r;
    for (int k = 1; k < u.stored(); ++k) r.push_back(u.coeffs()[static_cast<std::size_t>(k)] * C(k));
    return Series<C>(std::move(r), u.is_exact() ? kExact : u.order() - 1, u.var());
}

/// Termwise antiderivative with zero constant term. Order rises by one.
template <class C>
Series<C> integrate(const Series<C>& u) {
    std::vector<C> r(static_cast<std::size_t>(u.stored()) + 1, C(0));
    for (int k = 0; k < u.stored(); ++k)
        r[static_cast<std::size_t>(k) + 1] = u.coeffs()[static_cast<std::size_t>(k)] * C(Rational(1, k + 1));
    return Series<C>(std::move(r), order_add(u.order(), 1), u.var());
}

/// Substitutes `inner` (constant term zero) into `outer`.
template <class C>
Series<C> compose(const Series<C>& outer, const Series<C>& inner) {
    if (inner.order() < 0) throw TruncationError("composition with an inner series of unknown constant term");
    if (!coeff_traits<C>::is_zero(inner[0]))
        throw DomainError("composition requires the inner series to have zero constant term");
    if (outer.order() < 0) return Series<C>(std::vector<C>{}, -1, inner.var());
    const bool outer_constant = outer.is_exact() && outer.degree() <= 0;
    if (outer_constant || (inner.is_zero() && inner.is_exact()))
        return Series<C>::constant(outer[0], outer_constant || outer.order() >= 0 ? kExact : -1, inner.var());
    // Truncation of outer at N leaves an error of valuation v(N+1); truncation
    // of inner at M perturbs the result from x^(M+1) on.
    const long long v = inner.valuation();
    const long long bound_outer = outer.is_exact() ? kExact : v * (outer.order() + 1LL) - 1;
    const int order = static_cast<int>(std::min<long long>({bound_outer, inner.order(), kExact}));
    int top_k = outer.degree();
    if (order < kExact) top_k = std::min<long long>(top_k, order / v);
    const Series<C> in = inner.truncated(order);
    Series<C> acc = Series<C>::constant(top_k >= 0 ? outer[top_k] : C(0), order, inner.var());
    for (int k = top_k - 1; k >= 0; --k)
        acc = (acc * in + Series<C>::constant(outer[k], order, inner.var())).truncated(order);
    return acc.truncated(order);
}

/// exp(u) for u with zero constant term.
template <class C>
Series<C> exp(const Series<C>& u, int order = -1) {
    if (u.order() < 0) throw TruncationError("exp of a series with unknown constant term");
    if (!coeff_traits<C>::is_zero(u[0])) throw DomainError("exp requires zero constant term");
    if (order < 0) order = u.order();
    order = std::min(order, u.order());
    if (order >= kExact) {
        if (!u.is_zero()) throw DomainError("exp of a nonzero polynomial needs an explicit truncation");
        return Series<C>::constant(C(1), kExact, u.var());
    }
    std::vector<C> e(static_cast<std::size_t>(order) + 1, C(0));
    e[0] = C(1);
    for (int n = 1; n <= order; ++n) {
        C acc(0);
        for (int k = 1; k <= n && k < u.stored(); ++k)
            acc += u.coeffs()[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n - k)] * C(k);
        e[static_cast<std::size_t>(n)] = acc * C(Rational(1, n));
    }
    return Series<C>(std::move(e), order, u.var());
}

/// log(u) for u with constant term 1.
template <class C>
Series<C> log(const Series<C>& u, int order = -1) {
    if (u.order() < 0) throw TruncationError("log of a series with unknown constant term");
    if (u[0] != C(1)) throw DomainError("log requires constant term 1");
    if (order < 0) order = u.order();
    order = std::min(order, u.order());
    if (order >= kExact) {
        if (u.degree() > 0) throw DomainError("log of a non-constant polynomial needs an explicit truncation");
        return Series<C>(std::vector<C>{}, kExact, u.var());
    }
    std::vector<C> l(static_cast<std::size_t>(order) + 1, C(0));
    auto uk = [&](int k) { return k < u.stored() ? u.coeffs()[static_cast<std::size_t>(k)] : C(0); };
    for (int n = 1; n <= order; ++n) {
        C acc = uk(n) * C(n);
        for (int k = 1; k < n; ++k) acc -= l[static_cast<std::size_t>(k)] * uk(n - k) * C(k);
        l[static_cast<std::size_t>(n)] = acc * C(Rational(1, n));
    }
    return Series<C>(std::move(l), order, u.var());
}

/// u^e for u with constant term 1 and a symbolic exponent e, via the
/// power recurrence n·v_n = Σ_{k=1..n} ((e+1)k − n) u_k v_{n−k}.
template <class C>
PSeries pow_param(const Series<C>& u, const ParamPoly& e, int order = -1) {
    if (u.order() < 0) throw TruncationError("power of a series with unknown constant term");
    if (u[0] != C(1)) throw DomainError("symbolic power requires constant term 1");
    if (order < 0) order = u.order();
    order = std::min(order, u.order());
    if (order >= kExact) {
        if (u.degree() > 0) throw DomainError("symbolic power of a polynomial needs an explicit truncation");
        return PSeries::constant(ParamPoly(1), kExact, u.var());
    }
    std::vector<ParamPoly> v(static_cast<std::size_t>(order) + 1);
    v[0] = ParamPoly(1);
    const ParamPoly e1 = e + ParamPoly(1);
    for (int n = 1; n <= order; ++n) {
        ParamPoly acc;
        for (int k = 1; k <= n && k < u.stored(); ++k) {
            const ParamPoly uk(u.coeffs()[static_cast<std::size_t>(k)]);
            if (uk.is_zero()) continue;
            acc += (e1 * ParamPoly(Rational(k)) - ParamPoly(Rational(n))) * uk * v[static_cast<std::size_t>(n - k)];
        }
        v[static_cast<std::size_t>(n)] = acc.divided(Rational(n));
    }
    return PSeries(std::move(v), order, u.var());
}

struct RevertOptions {
    /// Accept a non-unit linear coefficient.
    bool normalize = false;
};

/// Functional inverse v of u (u(v(x)) = x), by Newton iteration with order
/// doubling: v <- v - (u(v) - x) / u'(v).
template <class C>
Series<C> revert(const Series<C>& u, int order = -1, RevertOptions opts = {}) {
    if (order < 0) order = u.order();
    order = std::min(order, u.order());
    if (order >= kExact) throw DomainError("reversion of a polynomial needs an explicit truncation");
    if (order < 1) throw TruncationError("reversion needs the linear coefficient");
    if (!coeff_traits<C>::is_zero(u[0])) throw DomainError("reversion requires zero constant term");
    const C u1 = u[1];
    if (coeff_traits<C>::is_zero(u1)) throw DomainError("reversion requires a nonzero linear coefficient");
    if (u1 != C(1) && !opts.normalize) throw DomainError("reversion requires unit linear coefficient");
    const C inv1 = coeff_traits<C>::inverse(u1);
    const auto& var = u.var();
    const Series<C> x = Series<C>::identity(kExact, var);
    const Series<C> du = derive(u);
    Series<C> v = Series<C>::monomial(inv1, 1, kExact, var);
    int prec = 1;
    while (prec < order) {
        prec = std::min(2 * prec, order);
        const Series<C> uv = compose(u.truncated(prec), v);
        const Series<C> duv = compose(du.truncated(prec - 1), v);
        const Series<C> corr = ((uv - x).truncated(prec) / duv).truncated(prec);
        v = (v - corr).truncated(prec).as_polynomial();
    }
    return v.with_order(kExact).truncated(order);
}

template <class C>
std::string Series<C>::to_string(int max_terms) const {
    std::string out;
    int shown = 0;
    for (int k = 0; k < stored(); ++k) {
        const C& c = c_[static_cast<std::size_t>(k)];
        if (coeff_traits<C>::is_zero(c)) continue;
        if (shown == max_terms) {
            out += " + ...";
            break;
        }
        if (!out.empty()) out += " + ";
        out += "(" + coeff_traits<C>::str(c) + ")";
        if (k > 0) out += "*" + var_ + (k > 1 ? "^" + std::to_string(k) : "");
        ++shown;
    }
    if (out.empty()) out = "0";
    if (!is_exact()) out += " + O(" + var_ + "^" + std::to_string(order_ + 1) + ")";
    return out;
}

} // namespace ulog

#endif
