#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lpsem {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed program text. Positions are 1-based.
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg), line(line), column(column) {}
    int line;
    int column;
};

// A variable in a rule head or naf literal that never occurs in a positive
// body literal.
struct SafetyError : Error {
    SafetyError(const std::string& msg, std::string variable)
        : Error(msg), variable(std::move(variable)) {}
    std::string variable;
};

// The program cannot be grounded (predicates take arguments but the program
// mentions no constants).
struct GroundingError : Error {
    using Error::Error;
};

/// A configured budget was exceeded: Herbrand base size, enumeration width,
// or guess count.
struct CapError : Error {
    using Error::Error;
};

// A semantics was applied outside its domain, e.g. the least model of a
// non-definite program or the perfect model of a non-stratified one.
struct PreconditionError : Error {
    using Error::Error;
};

struct NotDefiniteError : PreconditionError {
    NotDefiniteError(const std::string& msg, std::string literal)
        : PreconditionError(msg), literal(std::move(literal)) {}
    std::string literal;   // printed form of the first naf literal
};

struct NotStratifiedError : PreconditionError {
    NotStratifiedError(const std::string& msg, std::string cycle)
        : PreconditionError(msg), cycle(std::move(cycle)) {}
    std::string cycle;   // e.g. "alive -> alive* -> alive"
};

}  // namespace lpsem
