#include "ulog/asymptotic.hpp"

#include <sstream>

namespace ulog {

LogPoly::LogPoly(const ParamPoly& c) {
    if (!c.is_zero()) c_.push_back(c);
}

LogPoly::LogPoly(std::vector<ParamPoly> by_log_power) : c_(std::move(by_log_power)) { trim(); }

LogPoly LogPoly::log_alpha() { return LogPoly(std::vector<ParamPoly>{ParamPoly(), ParamPoly(1)}); }

ParamPoly LogPoly::operator[](int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return ParamPoly();
    return c_[static_cast<std::size_t>(j)];
}

void LogPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LogPoly& LogPoly::operator+=(const LogPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

LogPoly& LogPoly::operator-=(const LogPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

LogPoly operator*(const LogPoly& a, const LogPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ParamPoly> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return LogPoly(std::move(r));
}

LogPoly& LogPoly::operator*=(const LogPoly& o) { return *this = *this * o; }

LogPoly LogPoly::operator-() const {
    LogPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LogPoly LogPoly::d_log() const {
    std::vector<ParamPoly> r;
    for (std::size_t j = 1; j < c_.size(); ++j) r.push_back(c_[j] * Rational(static_cast<long>(j)));
    return LogPoly(std::move(r));
}

LogPoly LogPoly::map(const std::function<ParamPoly(const ParamPoly&)>& f) const {
    std::vector<ParamPoly> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(f(c));
    return LogPoly(std::move(r));
}

std::string LogPoly::to_string() const {
    if (c_.empty()) return "0";
    if (c_.size() == 1) return c_[0].to_string();
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[j].to_string() + ")";
        if (j > 0) out += "*ln(a)" + (j > 1 ? "^" + std::to_string(j) : std::string());
    }
    return out;
}

AsymptoticSeries::AsymptoticSeries(ParamPoly exponent, Series<LogPoly> coeffs)
    : exponent_(std::move(exponent)), body_(coeffs.renamed("1/a")) {}

AsymptoticSeries::AsymptoticSeries(ParamPoly exponent, const PSeries& coeffs)
    : exponent_(std::move(exponent)),
      body_(coeffs.map([](const ParamPoly& c) { return LogPoly(c); }).renamed("1/a")) {}

AsymptoticSeries AsymptoticSeries::power(const ParamPoly& e) {
    return {e, Series<LogPoly>::constant(LogPoly(1), kExact, "1/a")};
}

AsymptoticSeries operator*(const AsymptoticSeries& a, const AsymptoticSeries& b) {
    return {a.exponent_ + b.exponent_, a.body_ * b.body_};
}

AsymptoticSeries operator/(const AsymptoticSeries& a, const AsymptoticSeries& b) {
    if (b.body_.order() < 0 || b.body_[0].is_zero() || b.body_[0].log_degree() != 0 || !b.body_[0][0].is_constant())
        throw DomainError("asymptotic division requires a rational unit leading coefficient");
    return {a.exponent_ - b.exponent_, a.body_ / b.body_};
}

namespace {

// Integer d with ea - eb = d, or throws.
long exponent_gap(const ParamPoly& ea, const ParamPoly& eb) {
    const ParamPoly d = ea - eb;
    if (!d.is_constant() || d.constant_term().get_den() != 1)
        throw MismatchError("exponents " + ea.to_string() + " and " + eb.to_string() +
                            " do not differ by an integer");
    return d.constant_term().get_num().get_si();
}

AsymptoticSeries combine(const AsymptoticSeries& a, const AsymptoticSeries& b, int sign) {
    const long gap = exponent_gap(a.exponent(), b.exponent());
    Series<LogPoly> ba = a.body(), bb = b.body();
    ParamPoly e = a.exponent();
    if (gap >= 0) {
        bb = bb.shifted_up(static_cast<int>(gap));
    } else {
        ba = ba.shifted_up(static_cast<int>(-gap));
        e = b.exponent();
    }
    return {e, sign > 0 ? ba + bb : ba - bb};
}

} // namespace

AsymptoticSeries operator+(const AsymptoticSeries& a, const AsymptoticSeries& b) { return combine(a, b, 1); }
AsymptoticSeries operator-(const AsymptoticSeries& a, const AsymptoticSeries& b) { return combine(a, b, -1); }

AsymptoticSeries AsymptoticSeries::substitute(Sym sym, const ParamPoly& v) const {
    auto sub = [&](const ParamPoly& c) { return c.substitute(sym, v); };
    return {exponent_.substitute(sym, v), body_.map([&](const LogPoly& c) { return c.map(sub); })};
}

AsymptoticSeries AsymptoticSeries::specialize(Sym sym, const Rational& v) const {
    return substitute(sym, ParamPoly(v));
}

std::string AsymptoticSeries::to_string(int max_terms) const {
    std::ostringstream os;
    os << "a^(" << exponent_.to_string() << ")*[" << body_.to_string(max_terms) << "]";
    return os.str();
}

AsymptoticSeries log(const AsymptoticSeries& a) {
    if (a.order() < 0 || a[0] != LogPoly(1)) throw DomainError("asymptotic log requires leading coefficient 1");
    Series<LogPoly> body = ulog::log(a.body());
    const LogPoly lead = LogPoly(std::vector<ParamPoly>{ParamPoly(), a.exponent()});
    body = body + Series<LogPoly>::constant(lead, kExact, "1/a");
    return {ParamPoly(), body};
}

AsymptoticSeries d_dalpha(const AsymptoticSeries& a) {
    // d/dα [α^{e-k} c_k(ln α)] = α^{e-k-1} ((e-k) c_k + c_k').
    const auto& b = a.body();
    std::vector<LogPoly> out;
    for (int k = 0; k < b.stored(); ++k) {
        const LogPoly ck = b.coeffs()[static_cast<std::size_t>(k)];
        out.push_back(ck * LogPoly(a.exponent() - ParamPoly(Rational(k))) + ck.d_log());
    }
    return {a.exponent() - ParamPoly(1), Series<LogPoly>(std::move(out), b.order(), "1/a")};
}

AsymptoticSeries d_ds(const AsymptoticSeries& a) {
    // d/ds α^{e(s)} = e'(s) ln α · α^{e(s)}.
    const ParamPoly de = a.exponent().derivative(Sym::s);
    const LogPoly factor(std::vector<ParamPoly>{ParamPoly(), de});
    const auto& b = a.body();
    std::vector<LogPoly> out;
    for (int k = 0; k < b.stored(); ++k) {
        const LogPoly& ck = b.coeffs()[static_cast<std::size_t>(k)];
        out.push_back(ck.map([](const ParamPoly& c) { return c.derivative(Sym::s); }) + ck * factor);
    }
    return {a.exponent(), Series<LogPoly>(std::move(out), b.order(), "1/a")};
}

int first_difference(const AsymptoticSeries& a, const AsymptoticSeries& b, int depth) {
    const AsymptoticSeries d = a - b;
    const int top = std::min(depth, d.order());
    for (int k = 0; k <= top; ++k)
        if (!d[k].is_zero()) return k;
    return -1;
}

AsymptoticSeries from_alpha_polynomial(const QSeries& p, int depth, int shift) {
    const int d = p.degree();
    std::vector<LogPoly> out;
    for (int k = 0; k <= d; ++k) out.emplace_back(ParamPoly(p.coeffs()[static_cast<std::size_t>(d - k)]));
    return {ParamPoly(Rational(d - shift)), Series<LogPoly>(std::move(out), depth, "1/a")};
}

} // namespace ulog
