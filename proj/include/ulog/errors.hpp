#ifndef ULOG_ERRORS_HPP
#define ULOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ulog {

/// A coefficient was requested beyond the order up to which it is known.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation's algebraic precondition does not hold (nonzero constant
/// term for composition, non-unit leading coefficient for division, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Incompatible operands: different variables, mismatched symbols.
class MismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed user input (family specs, config files, CLI flags).
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, int line, int column)
        : std::invalid_argument(what + " (line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ")"),
          detail_(what), line_(line), column_(column) {}

    /// The message without the position suffix.
    const std::string& detail() const noexcept { return detail_; }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string detail_;
    int line_;
    int column_;
};

} // namespace ulog

#endif
