#include "ulog/param_poly.hpp"

#include "ulog/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ulog {

const char* symbol_name(Sym sym) {
    switch (sym) {
    case Sym::s: return "s";
    case Sym::H: return "H";
    case Sym::A: return "A";
    }
    return "?";
}

ParamPoly::ParamPoly(const Rational& c) {
    if (c == 0) return;
    Rational v = c;
    v.canonicalize();
    terms_.emplace(Monomial{}, std::move(v));
}

ParamPoly ParamPoly::symbol(Sym sym) {
    Monomial m{};
    m[static_cast<std::size_t>(sym)] = 1;
    return monomial(1, m);
}

ParamPoly ParamPoly::monomial(const Rational& c, const Monomial& m) {
    ParamPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool ParamPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational ParamPoly::constant_value() const {
    if (!is_constant()) throw DomainError("expected a constant, got " + to_string());
    return constant_term();
}

Rational ParamPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::degree(Sym sym) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m[static_cast<std::size_t>(sym)]);
    return d;
}

int ParamPoly::total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (auto e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.is_constant()) return b * a.terms_.begin()->second;
    if (b.is_constant()) return a * b.terms_.begin()->second;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            ParamPoly::Monomial m;
            for (std::size_t i = 0; i < kSymbolCount; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
            r.add_term(m, ca * cb);
        }
    return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    *this = *this * o;
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

ParamPoly ParamPoly::pow(unsigned n) const {
    ParamPoly r(1), base = *this;
    while (n) {
        if (n & 1u) r *= base;
        n >>= 1u;
        if (n) base *= base;
    }
    return r;
}

ParamPoly ParamPoly::derivative(Sym sym) const {
    const auto i = static_cast<std::size_t>(sym);
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        --d[i];
        r.add_term(d, c * m[i]);
    }
    return r;
}

ParamPoly ParamPoly::substitute(Sym sym, const ParamPoly& value) const {
    const auto i = static_cast<std::size_t>(sym);
    ParamPoly r;
    std::map<unsigned, ParamPoly> powers;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        const unsigned e = rest[i];
        rest[i] = 0;
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
        r += monomial(c, rest) * it->second;
    }
    return r;
}

ParamPoly ParamPoly::divide_by_symbol(Sym sym) const {
    const auto i = static_cast<std::size_t>(sym);
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0)
            throw DomainError(to_string() + " is not divisible by " + symbol_name(sym));
        Monomial d = m;
        --d[i];
        r.terms_.emplace(d, c);
    }
    return r;
}

ParamPoly ParamPoly::divided(const Rational& c) const {
    if (c == 0) throw DomainError("division of a parameter polynomial by zero");
    ParamPoly r = *this;
    for (auto& [m, v] : r.terms_) v /= c;
    return r;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first reads naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit_monomial = m == Monomial{};
        if (mag != 1 || unit_monomial) {
            os << ulog::to_string(mag);
            if (!unit_monomial) os << "*";
        }
        bool first_factor = true;
        for (std::size_t k = 0; k < kSymbolCount; ++k) {
            if (m[k] == 0) continue;
            if (!first_factor) os << "*";
            first_factor = false;
            os << symbol_name(static_cast<Sym>(k));
            if (m[k] > 1) os << "^" << m[k];
        }
    }
    return os.str();
}

ParamPoly falling(const ParamPoly& top, long k) {
    ParamPoly r(1);
    for (long i = 0; i < k; ++i) r *= (top - ParamPoly(Rational(i)));
    return r;
}

ParamPoly binomial(const ParamPoly& top, long k) {
    if (k < 0) return ParamPoly();
    return falling(top, k).divided(Rational(factorial(k)));
}

} // namespace ulog
