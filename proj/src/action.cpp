#include "kforms/action.hpp"

#include <stdexcept>
#include <vector>

namespace kforms {

namespace {

using detail::Terms;

// Grade-1 term lists for the columns of g.
std::vector<Terms> column_terms(const QMat& m) {
  std::vector<Terms> cols(static_cast<std::size_t>(m.cols));
  for (int j = 0; j < m.cols; ++j) {
    for (int i = 0; i < m.rows; ++i) {
      if (!is_zero(m.at(i, j))) {
        cols[static_cast<std::size_t>(j)].emplace_back(Blade{1} << i, m.at(i, j));
      }
    }
  }
  return cols;
}

Terms act_terms(const QMat& m, const Terms& terms) {
  const std::vector<Terms> cols = column_terms(m);
  Terms total;
  for (const auto& [b, c] : terms) {
    Terms prod{{Blade{0}, Rat(1)}};
    for (Blade rest = b; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest) + 1;
      prod = detail::wedge_terms(prod, cols[static_cast<std::size_t>(i - 1)]);
    }
    total = detail::add_terms(total, detail::scale_terms(prod, c));
  }
  return total;
}

Terms leibniz_terms(const QMat& x, const Terms& terms, int n) {
  Terms raw;
  for (const auto& [b, c] : terms) {
    for (Blade rest = b; rest != 0; rest &= rest - 1) {
      const int t = std::countr_zero(rest) + 1;
      const Blade removed = b & ~(Blade{1} << (t - 1));
      const int pos = blade_position(b, t);
      for (int j = 1; j <= n; ++j) {
        const Rat& e = x.at(j - 1, t - 1);
        if (is_zero(e)) continue;
        if (j == t) {
          raw.emplace_back(b, c * e);
          continue;
        }
        const Blade jb = Blade{1} << (j - 1);
        if ((removed & jb) != 0) continue;
        int sign = wedge_sign(jb, removed);
        if (pos & 1) sign = -sign;
        Rat v = c * e;
        if (sign < 0) v = -v;
        raw.emplace_back(removed | jb, std::move(v));
      }
    }
  }
  return detail::normalize_terms(std::move(raw));
}

// Shared tangent-map builder. For each term, one basis index t is removed and
// one index r is inserted; the column is the matrix unit sending the source
// coordinate to the target one, which is E_{t r} on the form side and E_{r t}
// on the multivector side.
IntMat tangent_from_terms(int n, int k, const Terms& terms, bool form_side) {
  const std::vector<Blade> blades = blades_of_grade(n, k);
  std::vector<int> row_of(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < blades.size(); ++i) {
    row_of[blades[i]] = static_cast<int>(i);
  }
  IntMat out(static_cast<int>(blades.size()), n * n);
  for (const auto& [b, c] : terms) {
    const mpz_class& cz = c.get_num();
    for (Blade rest = b; rest != 0; rest &= rest - 1) {
      const int t = std::countr_zero(rest) + 1;
      const Blade removed = b & ~(Blade{1} << (t - 1));
      const int pos = blade_position(b, t);
      for (int r = 1; r <= n; ++r) {
        const int col = form_side ? (t - 1) * n + (r - 1) : (r - 1) * n + (t - 1);
        if (r == t) {
          out.at(row_of[b], col) += cz;
          continue;
        }
        const Blade rb = Blade{1} << (r - 1);
        if ((removed & rb) != 0) continue;
        int sign = wedge_sign(rb, removed);
        if (pos & 1) sign = -sign;
        if (sign > 0) {
          out.at(row_of[removed | rb], col) += cz;
        } else {
          out.at(row_of[removed | rb], col) -= cz;
        }
      }
    }
  }
  return out;
}

}  // namespace

KVector act(const GLElement& g, const KVector& xi) {
  if (g.n() != xi.n) throw std::invalid_argument("shape mismatch in act");
  return KVector{xi.n, xi.k, act_terms(g.m, xi.terms)};
}

KForm act(const GLElement& g, const KForm& alpha) {
  if (g.n() != alpha.n) throw std::invalid_argument("shape mismatch in act");
  return KForm{alpha.n, alpha.k, act_terms(transpose(g.m), alpha.terms)};
}

KVector infinitesimal_action(const QMat& x, const KVector& xi) {
  if (x.rows != xi.n || x.cols != xi.n) throw std::invalid_argument("shape mismatch in infinitesimal_action");
  return KVector{xi.n, xi.k, leibniz_terms(x, xi.terms, xi.n)};
}

KForm infinitesimal_action(const QMat& x, const KForm& alpha) {
  if (x.rows != alpha.n || x.cols != alpha.n) {
    throw std::invalid_argument("shape mismatch in infinitesimal_action");
  }
  return KForm{alpha.n, alpha.k, leibniz_terms(transpose(x), alpha.terms, alpha.n)};
}

IntMat tangent_matrix(const KForm& alpha) {
  const KForm p = primitive_scale(alpha);
  return tangent_from_terms(p.n, p.k, p.terms, true);
}

IntMat tangent_matrix(const KVector& xi) {
  const KVector p = primitive_scale(xi);
  return tangent_from_terms(p.n, p.k, p.terms, false);
}

}  // namespace kforms
