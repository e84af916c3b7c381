#include "kforms/multivector.hpp"

#include <algorithm>

namespace kforms {
namespace detail {

namespace {
bool term_less(const std::pair<Blade, Rat>& a, const std::pair<Blade, Rat>& b) {
  return blade_lex_less(a.first, b.first);
}
}  // namespace

Terms normalize_terms(Terms terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Terms out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (is_zero(out.back().second)) out.pop_back();
    } else if (!is_zero(t.second)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

void check_shape(int n, int k, const Terms& terms) {
  if (n < 0 || n > kMaxDim || k < 0) throw std::invalid_argument("bad (n,k)");
  const Blade space = (n >= kMaxDim) ? ~Blade{0} : ((Blade{1} << n) - 1);
  for (const auto& [b, c] : terms) {
    if (blade_grade(b) != k) throw std::invalid_argument("mixed grades in tensor");
    if ((b & ~space) != 0) throw std::invalid_argument("blade index exceeds n");
  }
}

Terms add_terms(const Terms& a, const Terms& b) {
  Terms merged;
  merged.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first == ib->first) {
      Rat c = ia->second + ib->second;
      if (!is_zero(c)) merged.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    } else if (blade_lex_less(ia->first, ib->first)) {
      merged.push_back(*ia++);
    } else {
      merged.push_back(*ib++);
    }
  }
  merged.insert(merged.end(), ia, a.end());
  merged.insert(merged.end(), ib, b.end());
  return merged;
}

Terms scale_terms(const Terms& a, const Rat& c) {
  if (is_zero(c)) return {};
  Terms out;
  out.reserve(a.size());
  for (const auto& [b, v] : a) out.emplace_back(b, v * c);
  return out;
}

Terms wedge_terms(const Terms& a, const Terms& b) {
  Terms raw;
  raw.reserve(a.size() * b.size());
  for (const auto& [ba, ca] : a) {
    for (const auto& [bb, cb] : b) {
      const int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      Rat c = ca * cb;
      if (s < 0) c = -c;
      raw.emplace_back(ba | bb, std::move(c));
    }
  }
  return normalize_terms(std::move(raw));
}

std::pair<int, Blade> contract_blade(Blade sub, Blade whole) {
  if ((sub & whole) != sub) return {0, 0};
  int sign = 1;
  Blade cur = whole;
  for (Blade rest = sub; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest) + 1;
    if (blade_position(cur, i) & 1) sign = -sign;
    cur &= ~(Blade{1} << (i - 1));
  }
  return {sign, cur};
}

Terms contract_terms(const Terms& lower, const Terms& upper) {
  Terms raw;
  for (const auto& [bl, cl] : lower) {
    for (const auto& [bu, cu] : upper) {
      const auto [s, rest] = contract_blade(bl, bu);
      if (s == 0) continue;
      Rat c = cl * cu;
      if (s < 0) c = -c;
      raw.emplace_back(rest, std::move(c));
    }
  }
  return normalize_terms(std::move(raw));
}

Rat evaluate_terms(const Terms& forms, const Terms& vectors) {
  Rat total(0);
  auto ia = forms.begin();
  auto ib = vectors.begin();
  while (ia != forms.end() && ib != vectors.end()) {
    if (ia->first == ib->first) {
      total += ia->second * ib->second;
      ++ia;
      ++ib;
    } else if (blade_lex_less(ia->first, ib->first)) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return total;
}

Rat content_of(const Terms& terms) {
  mpz_class num(0);
  mpz_class den(1);
  for (const auto& [b, c] : terms) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Rat out(num, den);
  out.canonicalize();
  return out;
}

const Rat& coeff_in(const Terms& terms, Blade b) {
  static const Rat zero(0);
  auto it = std::lower_bound(terms.begin(), terms.end(), b,
                             [](const std::pair<Blade, Rat>& t, Blade key) {
                               return blade_lex_less(t.first, key);
                             });
  if (it != terms.end() && it->first == b) return it->second;
  return zero;
}

}  // namespace detail

KForm contract(const KVector& xi, const KForm& alpha) {
  if (xi.n != alpha.n) throw std::invalid_argument("shape mismatch in contract");
  if (xi.k > alpha.k) throw std::invalid_argument("contraction grade exceeds form grade");
  return KForm{alpha.n, alpha.k - xi.k, detail::contract_terms(xi.terms, alpha.terms)};
}

KVector contract(const KForm& beta, const KVector& xi) {
  if (beta.n != xi.n) throw std::invalid_argument("shape mismatch in contract");
  if (beta.k > xi.k) throw std::invalid_argument("contraction grade exceeds vector grade");
  return KVector{xi.n, xi.k - beta.k, detail::contract_terms(beta.terms, xi.terms)};
}

Rat evaluate(const KForm& alpha, const KVector& xi) {
  if (alpha.n != xi.n || alpha.k != xi.k) throw std::invalid_argument("shape mismatch in evaluate");
  return detail::evaluate_terms(alpha.terms, xi.terms);
}

}  // namespace kforms
