#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ispoly {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain: degenerate point, invalid formula,
/// malformed graph, division by zero.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. Carries the 1-based line number (0 if unknown).
class ParseError : public DomainError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DomainError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A configured resource bound would be exceeded. Exact tools never truncate.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// File or process I/O failure.
class IoError : public Error {
public:
    using Error::Error;
};

/// An external oracle answered outside the wire protocol.
class ProtocolError : public IoError {
public:
    using IoError::IoError;
};

} // namespace ispoly
