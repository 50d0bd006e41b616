#ifndef ULOG_FAMILY_SPEC_HPP
#define ULOG_FAMILY_SPEC_HPP

// Textual family descriptions: preset names, poly(c_1, ..., c_d) for
// f = c_1 x + ... + c_d x^d, or a bracketed coefficient list [f_0, f_1, ...].

#include "ulog/family.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ulog {

struct FamilySpec {
    enum class Kind { Preset, Poly, List };
    Kind kind = Kind::Preset;
    /// id, exp1, geom or nu for presets.
    std::string preset;
    /// Coefficients of f from x^0 for Poly and List.
    std::vector<Rational> coeffs;

    std::string to_string() const;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

const std::vector<std::string>& preset_names();

/// Throws ParseError with the line and column of the offending character;
/// line and column of the first character can be given when the text is
/// embedded in a larger document.
FamilySpec parse_family_spec(std::string_view text, int line = 1, int column = 1);

/// f to the given order (polynomials stay exact up to that order).
QSeries family_series(const FamilySpec& spec, int order);

BinomialFamily make_family(const FamilySpec& spec, int order);

} // namespace ulog

#endif
