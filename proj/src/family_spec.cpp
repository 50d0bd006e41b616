#include "ulog/family_spec.hpp"

#include <cctype>

namespace ulog {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, int line, int column) : text_(text), line_(line), column_(column) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    std::string word() {
        std::string out;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            out += peek();
            advance();
        }
        return out;
    }

    Rational rational() {
        skip_space();
        const int line = line_, column = column_;
        std::string tok;
        while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/' || peek() == '-' ||
                           peek() == '+')) {
            tok += peek();
            advance();
        }
        if (tok.empty()) fail("expected a rational number");
        try {
            return parse_rational(tok);
        } catch (const ParseError& e) {
            throw ParseError("malformed rational '" + tok + "'", line, column);
        }
    }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int column_;
};

std::vector<Rational> rational_list(Cursor& c, char close) {
    std::vector<Rational> out;
    c.skip_space();
    if (c.peek() == close) c.fail("empty coefficient list");
    while (true) {
        out.push_back(c.rational());
        c.skip_space();
        if (c.peek() == ',') {
            c.advance();
            continue;
        }
        if (c.peek() != close) c.fail(std::string("expected ',' or '") + close + "'");
        c.advance();
        return out;
    }
}

} // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"id", "exp1", "geom", "nu"};
    return names;
}

FamilySpec parse_family_spec(std::string_view text, int line, int column) {
    Cursor c(text, line, column);
    c.skip_space();
    FamilySpec spec;
    const int start_line = c.line(), start_column = c.column();
    if (c.peek() == '[') {
        c.advance();
        spec.kind = FamilySpec::Kind::List;
        spec.coeffs = rational_list(c, ']');
    } else {
        const std::string name = c.word();
        if (name.empty()) c.fail("expected a preset name, poly(...) or [...]");
        if (name == "poly") {
            c.expect('(');
            spec.kind = FamilySpec::Kind::Poly;
            spec.coeffs = rational_list(c, ')');
            spec.coeffs.insert(spec.coeffs.begin(), Rational(0));
        } else {
            bool known = false;
            for (const auto& p : preset_names()) known = known || p == name;
            if (!known) throw ParseError("unknown family '" + name + "'", start_line, start_column);
            spec.preset = name;
        }
    }
    c.skip_space();
    if (!c.done()) c.fail("trailing characters after family spec");
    if (spec.kind != FamilySpec::Kind::Preset) {
        if (spec.coeffs.size() < 2 || spec.coeffs[0] != 0 || spec.coeffs[1] != 1)
            throw ParseError("f must be x + O(x^2)", start_line, start_column);
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    if (kind == Kind::Preset) return preset;
    std::string out = kind == Kind::Poly ? "poly(" : "[";
    for (std::size_t i = kind == Kind::Poly ? 1 : 0; i < coeffs.size(); ++i) {
        if (out.back() != '(' && out.back() != '[') out += ", ";
        out += ulog::to_string(coeffs[i]);
    }
    return out + (kind == Kind::Poly ? ")" : "]");
}

QSeries family_series(const FamilySpec& spec, int order) {
    if (spec.kind != FamilySpec::Kind::Preset) return QSeries(spec.coeffs, kExact).truncated(order);
    const QSeries x = QSeries::identity(order);
    if (spec.preset == "id") return QSeries::identity(kExact).truncated(order);
    if (spec.preset == "exp1") return exp(x) - QSeries::constant(1, kExact);
    if (spec.preset == "geom") return x * inverse(QSeries::constant(1, kExact) - x, order);
    if (spec.preset == "nu") return tau_inverse(x * exp(x.scaled(Rational(-1))));
    throw DomainError("unknown preset '" + spec.preset + "'");
}

BinomialFamily make_family(const FamilySpec& spec, int order) { return build_family(family_series(spec, order), order); }

} // namespace ulog
