#include "ulog/ncpoly.hpp"

#include "ulog/errors.hpp"

#include <algorithm>

namespace ulog {

std::string letter_name(Letter l) {
    switch (l) {
    case Letter::Sigma: return "σ";
    case Letter::D: return "D";
    case Letter::E: return "E";
    case Letter::Lambda: return "λ";
    case Letter::LambdaInv: return "λ⁻¹";
    }
    return "?";
}

NCPoly NCPoly::word(NCWord w, const Rational& c) {
    NCPoly p;
    p.add(w, c);
    return p;
}

void NCPoly::add(const NCWord& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            NCWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

NCPoly operator*(const Rational& c, const NCPoly& a) {
    NCPoly r;
    for (const auto& [w, v] : a.terms_) r.add(w, c * v);
    return r;
}

NCPoly NCPoly::without_lambda() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) {
        NCWord v;
        std::copy_if(w.begin(), w.end(), std::back_inserter(v),
                     [](Letter l) { return l != Letter::Lambda && l != Letter::LambdaInv; });
        r.add(v, c);
    }
    return r;
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Rational a = abs(c);
        std::string word;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            word += letter_name(w[i]);
            if (j - i > 1) word += "^" + std::to_string(j - i);
            i = j;
        }
        if (word.empty()) word = "1";
        out += a == 1 ? word : ulog::to_string(a) + "·" + word;
    }
    return out;
}

std::vector<NCPoly> shape_coefficients(const NCPoly& p) {
    std::vector<NCPoly> alphas;
    for (const auto& [w, c] : p.terms()) {
        const auto e = std::find(w.begin(), w.end(), Letter::E);
        if (e == w.end()) throw DomainError("word " + NCPoly::word(w).to_string() + " has a true free term (no E)");
        if (std::find(e + 1, w.end(), Letter::E) != w.end())
            throw DomainError("word " + NCPoly::word(w).to_string() + " contains E twice");
        if (!std::all_of(e + 1, w.end(), [](Letter l) { return l == Letter::D; }))
            throw DomainError("word " + NCPoly::word(w).to_string() + " is not of the form α E D^i");
        const auto i = static_cast<std::size_t>(w.end() - e - 1);
        if (alphas.size() <= i) alphas.resize(i + 1);
        alphas[i] += NCPoly::word(NCWord(w.begin(), e), c);
    }
    return alphas;
}

NCPoly from_shape(const std::vector<NCPoly>& alphas) {
    NCPoly r;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        NCWord tail{Letter::E};
        tail.insert(tail.end(), i, Letter::D);
        r += alphas[i] * NCPoly::word(tail);
    }
    return r;
}

namespace {

NCWord d_power(std::size_t k) { return NCWord(k, Letter::D); }

NCWord concat(std::initializer_list<NCWord> parts) {
    NCWord w;
    for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
    return w;
}

const NCWord kSigma{Letter::Sigma};
const NCWord kE{Letter::E};
// λ^{-1} D λ
const NCWord kConjD{Letter::LambdaInv, Letter::D, Letter::Lambda};

NCPoly rewrite(const NCPoly& p, bool bar) {
    const std::vector<NCPoly> alphas = shape_coefficients(p);
    NCPoly r;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i].is_zero()) continue;
        const Rational a1(1, static_cast<long>(i + 1));
        const Rational a2(1, static_cast<long>(i + 2));
        NCPoly img;
        if (!bar) {
            img += NCPoly::word(concat({kSigma, d_power(i + 2), kE}), a1 * a2);
            img -= NCPoly::word(concat({kSigma, d_power(1), kE, d_power(i + 1)}), a1);
        } else {
            img += NCPoly::word(concat({kSigma, kConjD, d_power(i + 1), kE}), a1);
            img -= NCPoly::word(concat({kSigma, d_power(i + 2), kE}), a2);
            img -= NCPoly::word(concat({kSigma, kConjD, kE, d_power(i + 1)}), a1);
        }
        img += NCPoly::word(concat({kSigma, kE, d_power(i + 2)}), a2);
        r += alphas[i] * img;
    }
    return r;
}

} // namespace

NCPoly nu_step(const NCPoly& p) { return rewrite(p, false); }
NCPoly nu_bar_step(const NCPoly& p) { return rewrite(p, true); }

NCPoly nu_power(int n, bool with_lambda) {
    NCPoly p = NCPoly::word({Letter::E});
    for (int k = 0; k < n; ++k) p = with_lambda ? nu_bar_step(p) : nu_step(p);
    return p;
}

std::vector<NCPoly> matrix_row(int n) {
    std::vector<NCPoly> row{NCPoly::word({})};
    for (int step = 0; step < n; ++step) {
        std::vector<NCPoly> next(row.size() + 2);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].is_zero()) continue;
            const Rational a1(1, static_cast<long>(i + 1));
            const Rational a2(1, static_cast<long>(i + 2));
            next[0] += row[i] * NCPoly::word(concat({kSigma, d_power(i + 2)}), a1 * a2);
            next[i + 1] -= row[i] * NCPoly::word({Letter::Sigma, Letter::D}, a1);
            next[i + 2] += row[i] * NCPoly::word(kSigma, a2);
        }
        row = std::move(next);
    }
    return row;
}

} // namespace ulog
