#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "kforms/blade.hpp"
#include "kforms/rational.hpp"

namespace kforms {

namespace detail {

/// Sparse term list, kept sorted in canonical blade order with no zero
/// coefficients. All grade/shape checking lives in the typed wrappers.
using Terms = std::vector<std::pair<Blade, Rat>>;

[[nodiscard]] Terms normalize_terms(Terms terms);
[[nodiscard]] Terms add_terms(const Terms& a, const Terms& b);
[[nodiscard]] Terms scale_terms(const Terms& a, const Rat& c);
[[nodiscard]] Terms wedge_terms(const Terms& a, const Terms& b);

/// Iterated single-index contraction of `sub` out of `whole`, smallest index
/// of `sub` first (the left wedge factor contracts first). Returns {0, 0}
/// when sub is not contained in whole.
[[nodiscard]] std::pair<int, Blade> contract_blade(Blade sub, Blade whole);

[[nodiscard]] Terms contract_terms(const Terms& lower, const Terms& upper);
[[nodiscard]] Rat evaluate_terms(const Terms& forms, const Terms& vectors);
[[nodiscard]] const Rat& coeff_in(const Terms& terms, Blade b);

/// Content of a nonempty term list: the positive rational c such that the
/// coefficients divided by c are coprime integers.
[[nodiscard]] Rat content_of(const Terms& terms);

}  // namespace detail

enum class Variance { multivector, form };

/// An alternating grade-k tensor on an n-dimensional space. The variance tag
/// keeps k-vectors and k-forms from mixing accidentally; coefficients are
/// w.r.t. the standard blade basis either way.
template <Variance V>
struct Alt {
  int n = 0;
  int k = 0;
  detail::Terms terms;

  [[nodiscard]] bool is_zero() const { return terms.empty(); }
  [[nodiscard]] const Rat& coeff(Blade b) const { return detail::coeff_in(terms, b); }

  friend bool operator==(const Alt& a, const Alt& b) {
    return a.n == b.n && a.k == b.k && a.terms == b.terms;
  }
};

using KVector = Alt<Variance::multivector>;
using KForm = Alt<Variance::form>;

namespace detail {
void check_shape(int n, int k, const Terms& terms);
}

template <Variance V>
[[nodiscard]] Alt<V> make_alt(int n, int k, detail::Terms terms) {
  Alt<V> out{n, k, detail::normalize_terms(std::move(terms))};
  detail::check_shape(n, k, out.terms);
  return out;
}

template <Variance V>
[[nodiscard]] Alt<V> zero_alt(int n, int k) {
  return make_alt<V>(n, k, {});
}

template <Variance V>
[[nodiscard]] Alt<V> basis_alt(int n, Blade b) {
  return make_alt<V>(n, blade_grade(b), {{b, Rat(1)}});
}

template <Variance V>
[[nodiscard]] Alt<V> operator+(const Alt<V>& a, const Alt<V>& b) {
  if (a.n != b.n || a.k != b.k) throw std::invalid_argument("shape mismatch in +");
  return Alt<V>{a.n, a.k, detail::add_terms(a.terms, b.terms)};
}

template <Variance V>
[[nodiscard]] Alt<V> operator*(const Rat& c, const Alt<V>& a) {
  return Alt<V>{a.n, a.k, detail::scale_terms(a.terms, c)};
}

template <Variance V>
[[nodiscard]] Alt<V> operator-(const Alt<V>& a) {
  return Rat(-1) * a;
}

template <Variance V>
[[nodiscard]] Alt<V> operator-(const Alt<V>& a, const Alt<V>& b) {
  return a + (-b);
}

/// Exterior product; requires matching variance and space dimension.
template <Variance V>
[[nodiscard]] Alt<V> wedge(const Alt<V>& a, const Alt<V>& b) {
  if (a.n != b.n) throw std::invalid_argument("shape mismatch in wedge");
  if (a.k + b.k > a.n) return zero_alt<V>(a.n, a.k + b.k);
  return Alt<V>{a.n, a.k + b.k, detail::wedge_terms(a.terms, b.terms)};
}

/// Contraction of a multivector into a form: iota_xi alpha. For decomposable
/// xi = u ^ w the convention is iota_{u^w} = iota_w after iota_u (left factor
/// first).
[[nodiscard]] KForm contract(const KVector& xi, const KForm& alpha);

/// Contraction of a form into a multivector, same index combinatorics.
[[nodiscard]] KVector contract(const KForm& beta, const KVector& xi);

/// Full pairing <alpha, xi> for equal grades; equals contract(xi, alpha) when
/// the result has grade zero.
[[nodiscard]] Rat evaluate(const KForm& alpha, const KVector& xi);

/// Coefficient-wise reinterpretations (the basis identification V ~ V*).
[[nodiscard]] inline KForm as_form(const KVector& xi) { return KForm{xi.n, xi.k, xi.terms}; }
[[nodiscard]] inline KVector as_multivector(const KForm& alpha) {
  return KVector{alpha.n, alpha.k, alpha.terms};
}

/// Rescales by the unique positive rational that makes the coefficients
/// coprime integers. The zero tensor is returned unchanged.
template <Variance V>
[[nodiscard]] Alt<V> primitive_scale(const Alt<V>& a) {
  if (a.is_zero()) return a;
  return (Rat(1) / detail::content_of(a.terms)) * a;
}

}  // namespace kforms
