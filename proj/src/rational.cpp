#include "kforms/rational.hpp"

#include <stdexcept>

namespace kforms {

Rat make_rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rational(const std::string& text) {
  // GMP rejects a leading '+', the grammar allows it.
  const std::string body = (!text.empty() && text[0] == '+') ? text.substr(1) : text;
  const auto slash = body.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(mpz_class(body, 10));
    }
    mpz_class num(body.substr(0, slash), 10);
    mpz_class den(body.substr(slash + 1), 10);
    if (sgn(den) <= 0) throw std::invalid_argument("denominator must be positive");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

std::string format_rational(const Rat& value) {
  return value.get_str();
}

}  // namespace kforms
