#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "kforms/multivector.hpp"

namespace kforms {

/// Input error with a 0-based character position, e.g. from the expression or
/// matrix grammars.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("position " + std::to_string(position) + ": " + message),
        position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr     := term (('+'|'-') term)*
///   term     := [rational '*'?] blade | rational
///   blade    := 'e' digit+ | 'e{' int (',' int)* '}'
///   rational := int ['/' posint]
/// Whitespace is free between tokens; an optional sign may precede the first
/// term. The grade is inferred from the blades; `k` must be supplied for the
/// zero form and must agree with the expression when both are present.
[[nodiscard]] KForm parse_form(const std::string& text, int n, std::optional<int> k = {});
[[nodiscard]] KVector parse_multivector(const std::string& text, int n, std::optional<int> k = {});

/// Canonical output: terms in lexicographic blade order, compact blades when
/// all indices are single-digit, coefficients 1/-1 folded into the sign,
/// " + " / " - " separators. The zero element formats as "0".
[[nodiscard]] std::string format_form(const KForm& alpha);
[[nodiscard]] std::string format_multivector(const KVector& xi);

}  // namespace kforms
