#pragma once

#include <gmpxx.h>
#include <string>

namespace kforms {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator) under arithmetic; anything built from raw parts must go
/// through make_rational.
using Rat = mpq_class;

[[nodiscard]] Rat make_rational(const mpz_class& num, const mpz_class& den);

/// Parses "p" or "p/q" with optional leading sign; q must be positive.
/// Throws std::invalid_argument on malformed input.
[[nodiscard]] Rat parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
[[nodiscard]] std::string format_rational(const Rat& value);

[[nodiscard]] inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace kforms
