#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ban {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message), message_(message), line_(line), column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

    /// Returns a copy with the line number set (used when a single-line parser
    /// is driven by a file reader).
    ParseError at_line(std::size_t line, std::size_t column_offset = 0) const {
        return ParseError(message_, line, column_ + column_offset);
    }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// An analysis would exceed one of the configured size limits.
class LimitError : public Error {
public:
    LimitError(const std::string& message, std::string limit, std::size_t value)
        : Error(message), limit_(std::move(limit)), value_(value) {}

    /// Name of the governing limit, e.g. "max-support".
    const std::string& limit() const noexcept { return limit_; }
    std::size_t value() const noexcept { return value_; }

private:
    std::string limit_;
    std::size_t value_;
};

/// Evaluation met a variable the assignment does not bind.
class UnboundVariable : public Error {
public:
    explicit UnboundVariable(unsigned id)
        : Error("unbound variable x" + std::to_string(id)), id_(id) {}

    unsigned id() const noexcept { return id_; }

private:
    unsigned id_;
};

/// A perspective could not eliminate a hidden automaton.
class HidingError : public Error {
public:
    using Error::Error;
};

}  // namespace ban
