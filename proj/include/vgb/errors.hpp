#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vgb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class UndefinedInput : public Error {
public:
    using Error::Error;
};

class ExponentOverflow : public Error {
public:
    using Error::Error;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial text; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Raised when Buchberger exceeds its S-pair or coefficient-size cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// The order handed to an elimination routine does not eliminate the requested block.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Caller violated a documented precondition (e.g. non-monomial in_w(I)).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotAConfiguration : public Error {
public:
    using Error::Error;
};

/// A verification that is a theorem instance failed. Never expected.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace vgb
