#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqmine {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input row. `line()` is 1-based and counts the header.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Subsequence enumeration would exceed the configured length cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Bad window, threshold or generator parameters.
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Two miners produced different results for the same input.
class MismatchError : public Error {
public:
    using Error::Error;
};

}  // namespace seqmine
