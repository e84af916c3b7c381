#include "kforms/parse.hpp"

#include <cctype>

namespace kforms {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  [[nodiscard]] char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    skip_ws();
    return text_[pos_++];
  }
  [[nodiscard]] std::size_t pos() {
    skip_ws();
    return pos_;
  }
  [[noreturn]] void fail(const std::string& message) { throw ParseError(pos(), message); }

  [[nodiscard]] mpz_class integer() {
    skip_ws();
    std::string digits;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) digits += text_[pos_++];
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
    }
    if (pos_ == start) fail("expected integer");
    return mpz_class(digits, 10);
  }

  [[nodiscard]] Rat rational() {
    mpz_class num = integer();
    if (peek() == '/') {
      take();
      const std::size_t dpos = pos();
      mpz_class den = integer();
      if (sgn(den) <= 0) throw ParseError(dpos, "denominator must be positive");
      return make_rational(num, den);
    }
    return Rat(num);
  }

  /// Parses a blade; the cursor sits just past 'e'.
  [[nodiscard]] Blade blade_body(int n) {
    std::vector<int> indices;
    if (pos_ < text_.size() && text_[pos_] == '{') {
      ++pos_;
      while (true) {
        const std::size_t ipos = pos();
        mpz_class v = integer();
        if (v < 1 || v > n) throw ParseError(ipos, "blade index out of range 1..n");
        indices.push_back(static_cast<int>(v.get_si()));
        const char c = peek();
        if (c == ',') {
          take();
          continue;
        }
        if (c == '}') {
          take();
          break;
        }
        fail("expected ',' or '}' in blade");
      }
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const int d = text_[pos_] - '0';
        if (d < 1 || d > n) throw ParseError(pos_, "blade index out of range 1..n");
        indices.push_back(d);
        ++pos_;
      }
      if (pos_ == start) fail("expected blade indices after 'e'");
    }
    Blade b = 0;
    for (std::size_t j = 0; j < indices.size(); ++j) {
      const Blade bit = Blade{1} << (indices[j] - 1);
      if (b & bit) throw ParseError(pos_ - 1, "duplicate index in blade");
      b |= bit;
    }
    return b;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

struct ParsedExpr {
  detail::Terms terms;
  std::optional<int> grade;  // grade of blade terms; empty when pure scalar
};

ParsedExpr parse_expr(const std::string& text, int n) {
  Scanner sc(text);
  ParsedExpr out;
  if (sc.done()) sc.fail("empty expression");
  bool first = true;
  std::optional<int> scalar_seen_at;  // any grade-0 (bare rational) term forces k=0
  while (!sc.done()) {
    Rat sign(1);
    if (!first || sc.peek() == '+' || sc.peek() == '-') {
      const std::size_t spos = sc.pos();
      const char c = sc.take();
      if (c == '-') {
        sign = -1;
      } else if (c != '+') {
        throw ParseError(spos, "expected '+' or '-' between terms");
      }
      if (sc.done()) sc.fail("dangling sign");
    }
    Rat coeff(1);
    bool have_coeff = false;
    if (sc.peek() != 'e') {
      coeff = sc.rational();
      have_coeff = true;
      if (sc.peek() == '*') sc.take();
    }
    if (sc.peek() == 'e') {
      const std::size_t bpos = sc.pos();
      sc.take();
      const Blade b = sc.blade_body(n);
      const int g = blade_grade(b);
      if (out.grade && *out.grade != g) {
        throw ParseError(bpos, "mixed blade grades in expression");
      }
      out.grade = g;
      out.terms.emplace_back(b, sign * coeff);
    } else if (have_coeff) {
      // A literal zero scalar is grade-free; only nonzero scalars force k=0.
      const Rat value = sign * coeff;
      if (!is_zero(value)) scalar_seen_at = 0;
      out.terms.emplace_back(0, value);
    } else {
      sc.fail("expected term");
    }
    first = false;
  }
  if (scalar_seen_at && out.grade && *out.grade != 0) {
    throw ParseError(0, "mixed blade grades in expression");
  }
  if (scalar_seen_at) out.grade = 0;
  return out;
}

detail::Terms parse_checked(const std::string& text, int n, std::optional<int> k, int& k_out) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("n out of range");
  ParsedExpr expr = parse_expr(text, n);
  detail::Terms terms = detail::normalize_terms(std::move(expr.terms));
  if (terms.empty()) {
    // The zero element carries no grade of its own; require an explicit k.
    if (expr.grade) {
      k_out = k.value_or(*expr.grade);
      if (k && *k != *expr.grade) throw std::invalid_argument("explicit k disagrees with expression");
    } else if (k) {
      k_out = *k;
    } else {
      throw std::invalid_argument("k required for the zero form");
    }
  } else {
    k_out = *expr.grade;
    if (k && *k != k_out) throw std::invalid_argument("explicit k disagrees with expression");
  }
  if (k_out < 0 || k_out > n) throw std::invalid_argument("k out of range 0..n");
  return terms;
}

std::string format_terms(const detail::Terms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : terms) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rat mag = negative ? Rat(-c) : c;
    if (b == 0) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += format_blade(b);
    } else {
      out += format_rational(mag) + "*" + format_blade(b);
    }
  }
  return out;
}

}  // namespace

KForm parse_form(const std::string& text, int n, std::optional<int> k) {
  int k_out = 0;
  auto terms = parse_checked(text, n, k, k_out);
  return make_alt<Variance::form>(n, k_out, std::move(terms));
}

KVector parse_multivector(const std::string& text, int n, std::optional<int> k) {
  int k_out = 0;
  auto terms = parse_checked(text, n, k, k_out);
  return make_alt<Variance::multivector>(n, k_out, std::move(terms));
}

std::string format_form(const KForm& alpha) { return format_terms(alpha.terms); }
std::string format_multivector(const KVector& xi) { return format_terms(xi.terms); }

}  // namespace kforms
