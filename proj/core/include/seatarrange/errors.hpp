#pragma once

#include <stdexcept>
#include <string>

namespace seat {

// Base for every library-raised error; carries only a message.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument from a caller: index out of range, p == q swap, wrong enum.
struct ArgumentError : Error {
    using Error::Error;
};

// Instance does not lie in the graph or profile class a solver requires.
struct GraphClassError : ArgumentError {
    using ArgumentError::ArgumentError;
};

// Malformed document or value during (de)serialization.
struct SchemaError : Error {
    using Error::Error;
};

// A combinatorial budget or enumeration cap was exceeded; deterministic refusal.
struct BudgetError : Error {
    using Error::Error;
};

// Exact arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace seat
