#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnsdiff {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed edge-list or configuration text.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input that parsed but holds nothing usable (e.g. an edge list with zero edges).
class EmptyInputError : public Error {
public:
    using Error::Error;
};

// Argument outside the domain of an operation: unknown node, non-edge pair, too few nodes.
class DomainError : public Error {
public:
    using Error::Error;
};

// Caller broke a documented precondition of an otherwise valid call.
class ContractViolation : public Error {
public:
    using Error::Error;
};

// Invalid experiment configuration (maps to CLI exit code 1).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Missing or unreadable data, or data that does not support the request (CLI exit code 2).
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace cnsdiff
