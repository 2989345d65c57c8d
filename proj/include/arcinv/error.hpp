#ifndef ARCINV_ERROR_HPP
#define ARCINV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcinv {

enum class ErrorKind {
    DimensionMismatch,
    FieldMismatch,
    InvalidArgument,
    Precondition,
    InexactDivision,
    Precision,
    Budget,
    Parse,
    Validation,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Truncation ran out of coefficients. Carries the precision that was in use
/// and a suggested precision for a retry.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, std::size_t precision, std::size_t step = 0)
        : Error(ErrorKind::Precision, what), precision_(precision), step_(step) {}

    std::size_t precision() const noexcept { return precision_; }
    std::size_t retry_precision() const noexcept { return 2 * precision_; }
    // Blow-up step at which the shortfall happened (0 outside directed sequences).
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t precision_;
    std::size_t step_;
};

/// Text input error with a 1-based location.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(ErrorKind::Parse, format(message, line, column)), message_(message), line_(line),
          column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace arcinv

#endif  // ARCINV_ERROR_HPP
