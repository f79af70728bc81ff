#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gallai {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (bad order, color, parameter).
class DomainError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed GCG input. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& cause)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + cause),
          line_(line),
          column_(column),
          cause_(cause)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& cause() const noexcept { return cause_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string cause_;
};

} // namespace gallai
