#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nonlin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file or wire data. The message carries the field/position
/// context so the CLI can print it verbatim as a diagnostic.
struct ParseError : Error {
    using Error::Error;
};

/// A domain invariant failed while building a value (measure validation,
/// function shape checks).
struct ValidationError : Error {
    enum class Kind { NonZeroEmpty, NonMonotone, NegativeValue, BadShape };

    ValidationError(Kind k, const std::string& message) : Error(message), kind(k) {}

    Kind kind;
    // violating pair for NonMonotone (subset masks, a proper subset of b)
    std::uint32_t subset = 0;
    std::uint32_t superset = 0;
};

/// Instance exceeds a configured size cap (DP/LP limits, oracle limits).
struct CapError : Error {
    using Error::Error;
};

/// Inconsistent dimensions in a linear program.
struct DimensionError : Error {
    using Error::Error;
};

}  // namespace nonlin
