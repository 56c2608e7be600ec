#pragma once

#include <stdexcept>
#include <string>

namespace strongce {

/// Malformed graph input (endpoint out of range, empty graph where one is required).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller-side precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A procedure whose success is guaranteed by a counting argument failed.
/// Always indicates a defect in this library, never a bad input.
class InternalGuaranteeViolated : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exhaustive search hit its node or time budget.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every fallback failed to complete a coloring. For inputs with maximum
/// degree 4 and 22-lists this means the library has a defect.
class ColoringExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input file could not be parsed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace strongce
