#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace roughstat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument to an operation (dimension mismatch, out-of-range parameter, ...).
struct InvalidInput : Error {
    using Error::Error;
};

// Grid machinery only supports dim <= 2.
struct UnsupportedDimension : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Syntax error in DSL text. `offset` is the byte offset of the offending token.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;

    ParseError(std::size_t offset_, std::string expected_, const std::string& what_)
        : Error(what_), offset(offset_), expected(std::move(expected_)) {}
};

// Runtime failure while evaluating a DSL expression at index k.
struct EvalError : Error {
    std::string subexpr;
    std::int64_t k;

    EvalError(std::string subexpr_, std::int64_t k_, const std::string& what_)
        : Error(what_), subexpr(std::move(subexpr_)), k(k_) {}
};

// Lookup of an unknown builtin sequence name.
struct NotFound : Error {
    using Error::Error;
};

// The limsup/liminf bisection could not bracket a NonZero verdict.
struct OracleInconclusive : Error {
    using Error::Error;
};

} // namespace roughstat
