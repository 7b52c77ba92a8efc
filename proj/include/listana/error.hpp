#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace listana {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data; carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Input table is missing a required column or has an unusable header.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Precondition violation: bad argument values, degenerate inputs.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Design matrix is rank deficient; names the offending columns.
class CollinearityError : public Error {
public:
    CollinearityError(const std::string& what, std::vector<std::string> columns)
        : Error(what), columns_(std::move(columns)) {}

    const std::vector<std::string>& columns() const { return columns_; }

private:
    std::vector<std::string> columns_;
};

} // namespace listana
