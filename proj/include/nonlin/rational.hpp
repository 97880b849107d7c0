#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace nonlin {

/// Exact rational scalar. All arithmetic in this library is exact; there is
/// no floating-point phase anywhere.
using Rational = mpq_class;

/// Convenience constructor, canonicalized: rat(3, 6) == rat(1, 2).
Rational rat(long num, long den = 1);

/// Canonical wire form: lowest terms, positive denominator, "p/q" or plain
/// "p" when the denominator is 1.
std::string rat_string(const Rational& r);

/// Parses the wire form ("p", "p/q", optional leading sign). Returns nullopt
/// on malformed input and, when `error` is given, a human-readable reason.
std::optional<Rational> parse_rational(std::string_view text, std::string* error = nullptr);

}  // namespace nonlin
