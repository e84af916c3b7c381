#include "kforms/invariants.hpp"

#include <stdexcept>
#include <utility>

namespace kforms {

namespace {

Blade full_blade(int n) { return (Blade{1} << n) - 1; }

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

std::vector<int> blade_row_index(int n, const std::vector<Blade>& blades) {
  std::vector<int> idx(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < blades.size(); ++i) idx[blades[i]] = static_cast<int>(i);
  return idx;
}

}  // namespace

IntMat interior_matrix(const KForm& alpha) {
  if (alpha.k < 1) throw std::invalid_argument("interior_matrix requires k >= 1");
  const KForm p = primitive_scale(alpha);
  const std::vector<Blade> rows = blades_of_grade(p.n, p.k - 1);
  const std::vector<int> row_of = blade_row_index(p.n, rows);
  IntMat out(static_cast<int>(rows.size()), p.n);
  for (const auto& [b, c] : p.terms) {
    const mpz_class& cz = c.get_num();
    for (Blade rest = b; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest) + 1;
      const int row = row_of[b & ~(Blade{1} << (i - 1))];
      if (blade_position(b, i) & 1) {
        out.at(row, i - 1) -= cz;
      } else {
        out.at(row, i - 1) += cz;
      }
    }
  }
  return out;
}

Subspace annihilator(const KForm& alpha) {
  if (alpha.k == 0) {
    return alpha.is_zero() ? Subspace::full(alpha.n) : Subspace::zero(alpha.n);
  }
  const KernelResult kr = kernel_exact(interior_matrix(alpha));
  return Subspace(kr.kernel, alpha.n);
}

int kernel_dim(const KForm& alpha) {
  if (alpha.k == 0) return alpha.is_zero() ? alpha.n : 0;
  return alpha.n - rank_exact(interior_matrix(alpha));
}

bool is_nondegenerate(const KForm& alpha) { return kernel_dim(alpha) == 0; }

Subspace support(const KVector& xi) {
  if (xi.k == 0) return Subspace::zero(xi.n);
  const std::vector<Blade> coblades = blades_of_grade(xi.n, xi.k - 1);
  QMat rows(static_cast<int>(coblades.size()), xi.n);
  for (std::size_t s = 0; s < coblades.size(); ++s) {
    const KVector v = contract(basis_alt<Variance::form>(xi.n, coblades[s]), xi);
    for (const auto& [b, c] : v.terms) {
      rows.at(static_cast<int>(s), std::countr_zero(b)) = c;
    }
  }
  return Subspace(rows, xi.n);
}

int support_dim(const KVector& xi) { return support(xi).dim(); }

int orbit_tangent_rank(const KForm& alpha) { return kernel_exact(tangent_matrix(alpha)).rank; }

int orbit_tangent_rank(const KVector& xi) { return kernel_exact(tangent_matrix(xi)).rank; }

int stabilizer_dim(const KForm& alpha) { return alpha.n * alpha.n - orbit_tangent_rank(alpha); }

int stabilizer_dim(const KVector& xi) { return xi.n * xi.n - orbit_tangent_rank(xi); }

bool is_stable(const KForm& alpha) {
  return orbit_tangent_rank(alpha) == binomial(alpha.n, alpha.k);
}

bool is_stable(const KVector& xi) { return orbit_tangent_rank(xi) == binomial(xi.n, xi.k); }

namespace {
std::vector<QMat> reshape_kernel(const QMat& kernel, int n) {
  std::vector<QMat> out;
  out.reserve(static_cast<std::size_t>(kernel.rows));
  for (int r = 0; r < kernel.rows; ++r) {
    QMat x(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) x.at(i, j) = kernel.at(r, i * n + j);
    }
    out.push_back(std::move(x));
  }
  return out;
}
}  // namespace

std::vector<QMat> stabilizer_basis(const KForm& alpha) {
  return reshape_kernel(kernel_exact(tangent_matrix(alpha)).kernel, alpha.n);
}

std::vector<QMat> stabilizer_basis(const KVector& xi) {
  return reshape_kernel(kernel_exact(tangent_matrix(xi)).kernel, xi.n);
}

SymmetricForm make_symmetric_form(QMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("symmetric form must be square");
  for (int i = 0; i < m.rows; ++i) {
    for (int j = i + 1; j < m.cols; ++j) {
      if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("matrix is not symmetric");
    }
  }
  return SymmetricForm{m.rows, std::move(m)};
}

namespace {

void swap_sym(QMat& m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

}  // namespace

Signature signature(const SymmetricForm& s) {
  QMat m = s.m;
  const int n = m.rows;
  for (int piv = 0; piv < n; ++piv) {
    if (is_zero(m.at(piv, piv))) {
      int dj = -1;
      for (int j = piv + 1; j < n; ++j) {
        if (!is_zero(m.at(j, j))) {
          dj = j;
          break;
        }
      }
      if (dj >= 0) {
        swap_sym(m, piv, dj);
      } else {
        // Whole trailing diagonal is zero; pull a nonzero off-diagonal pair
        // onto the diagonal (rows/cols j into i makes the entry 2 a_ij).
        int bi = -1;
        int bj = -1;
        for (int i2 = piv; i2 < n && bi < 0; ++i2) {
          for (int j2 = i2 + 1; j2 < n; ++j2) {
            if (!is_zero(m.at(i2, j2))) {
              bi = i2;
              bj = j2;
              break;
            }
          }
        }
        if (bi < 0) break;
        for (int c = 0; c < n; ++c) m.at(bi, c) += m.at(bj, c);
        for (int r = 0; r < n; ++r) m.at(r, bi) += m.at(r, bj);
        if (bi != piv) swap_sym(m, piv, bi);
      }
    }
    const Rat d = m.at(piv, piv);
    if (is_zero(d)) break;
    for (int i2 = piv + 1; i2 < n; ++i2) {
      if (is_zero(m.at(i2, piv))) continue;
      const Rat f = m.at(i2, piv) / d;
      for (int c = 0; c < n; ++c) m.at(i2, c) -= f * m.at(piv, c);
      for (int r = 0; r < n; ++r) m.at(r, i2) -= f * m.at(r, piv);
    }
  }
  Signature out;
  for (int i = 0; i < n; ++i) {
    const int s2 = sgn(m.at(i, i));
    if (s2 > 0) {
      ++out.pos;
    } else if (s2 < 0) {
      ++out.neg;
    } else {
      ++out.zero;
    }
  }
  return out;
}

SymmetricForm trace_gram(const std::vector<QMat>& mats) {
  const int m = static_cast<int>(mats.size());
  QMat g(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      Rat tr(0);
      const QMat& x = mats[static_cast<std::size_t>(a)];
      const QMat& y = mats[static_cast<std::size_t>(b)];
      for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) {
          if (!is_zero(x.at(i, j)) && !is_zero(y.at(j, i))) tr += x.at(i, j) * y.at(j, i);
        }
      }
      g.at(a, b) = tr;
      g.at(b, a) = tr;
    }
  }
  return SymmetricForm{m, std::move(g)};
}

KForm hodge_dual(const KVector& xi) {
  const Blade full = full_blade(xi.n);
  detail::Terms raw;
  raw.reserve(xi.terms.size());
  for (const auto& [b, c] : xi.terms) {
    const auto [s, rest] = detail::contract_blade(b, full);
    raw.emplace_back(rest, s < 0 ? -c : c);
  }
  return KForm{xi.n, xi.n - xi.k, detail::normalize_terms(std::move(raw))};
}

KVector inverse_hodge_dual(const KForm& rho) {
  const Blade full = full_blade(rho.n);
  detail::Terms raw;
  raw.reserve(rho.terms.size());
  for (const auto& [b, c] : rho.terms) {
    const Blade pre = full & ~b;
    const int s = detail::contract_blade(pre, full).first;
    raw.emplace_back(pre, s < 0 ? -c : c);
  }
  return KVector{rho.n, rho.n - rho.k, detail::normalize_terms(std::move(raw))};
}

namespace {
int gram_rank_of_grade2(int n, const detail::Terms& terms) {
  QMat a(n, n);
  for (const auto& [b, c] : terms) {
    const int i = std::countr_zero(b);
    const int j = 31 - std::countl_zero(b);
    a.at(i, j) = c;
    a.at(j, i) = -c;
  }
  return rank_reference(a);
}
}  // namespace

int two_form_rank(const KForm& alpha) {
  if (alpha.k != 2) throw std::invalid_argument("two_form_rank requires grade 2");
  return gram_rank_of_grade2(alpha.n, alpha.terms);
}

int two_vector_rank(const KVector& xi) {
  if (xi.k != 2) throw std::invalid_argument("two_vector_rank requires grade 2");
  return gram_rank_of_grade2(xi.n, xi.terms);
}

int hitchin_sign(const KForm& alpha) {
  if (alpha.n != 6 || alpha.k != 3) throw std::invalid_argument("hitchin_sign requires (n,k)=(6,3)");
  QMat kmat(6, 6);
  for (int j = 1; j <= 6; ++j) {
    const KVector ej = basis_alt<Variance::multivector>(6, Blade{1} << (j - 1));
    const KVector kv = inverse_hodge_dual(wedge(contract(ej, alpha), alpha));
    for (const auto& [b, c] : kv.terms) kmat.at(std::countr_zero(b), j - 1) = c;
  }
  Rat lambda(0);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) lambda += kmat.at(i, j) * kmat.at(j, i);
  }
  return sgn(lambda);
}

SymmetricForm b_form(const KForm& phi) {
  if (phi.n != 7 || phi.k != 3) throw std::invalid_argument("b_form requires (n,k)=(7,3)");
  const KVector tau = inverse_hodge_dual(phi);
  std::vector<KForm> cols;
  cols.reserve(7);
  for (int i = 1; i <= 7; ++i) {
    cols.push_back(contract(basis_alt<Variance::multivector>(7, Blade{1} << (i - 1)), phi));
  }
  QMat b(7, 7);
  for (int i = 0; i < 7; ++i) {
    for (int j = i; j < 7; ++j) {
      // Coefficient of e^{1..7} in c_i ^ c_j ^ phi, read off against the
      // dual multivector of phi.
      const Rat v = evaluate(wedge(cols[static_cast<std::size_t>(i)],
                                   cols[static_cast<std::size_t>(j)]),
                             tau);
      b.at(i, j) = v;
      b.at(j, i) = v;
    }
  }
  return make_symmetric_form(std::move(b));
}

Signature b_signature(const KForm& phi) { return signature(b_form(phi)); }

DualTwoVector dual_two_vector(const KForm& rho) {
  if (rho.k != rho.n - 2) throw std::invalid_argument("dual_two_vector requires k = n-2");
  const KVector zeta = inverse_hodge_dual(rho);
  DualTwoVector out;
  out.rank = two_vector_rank(zeta);
  if (out.rank == rho.n && rho.n % 2 == 0) {
    KVector power = zeta;
    for (int i = 1; i < rho.n / 2; ++i) power = wedge(power, zeta);
    out.top_sign = sgn(power.coeff(full_blade(rho.n)));
  }
  return out;
}

KForm embed_form(const KForm& alpha, int new_n) {
  if (new_n < alpha.n) throw std::invalid_argument("embed_form cannot shrink the space");
  return make_alt<Variance::form>(new_n, alpha.k, alpha.terms);
}

KForm reduce_degenerate(const KForm& alpha) {
  return reduce_degenerate(alpha, annihilator(alpha));
}

KForm reduce_degenerate(const KForm& alpha, const Subspace& ann) {
  if (ann.dim() == 0) return alpha;
  const std::vector<int> pivots = pivot_coordinates(ann);
  Blade pivot_mask = 0;
  for (int p : pivots) pivot_mask |= Blade{1} << (p - 1);
  std::vector<int> remap(static_cast<std::size_t>(alpha.n) + 1, 0);
  int next = 0;
  for (int i = 1; i <= alpha.n; ++i) {
    if ((pivot_mask & (Blade{1} << (i - 1))) == 0) remap[static_cast<std::size_t>(i)] = ++next;
  }
  detail::Terms kept;
  for (const auto& [b, c] : alpha.terms) {
    if ((b & pivot_mask) != 0) continue;
    Blade nb = 0;
    for (Blade rest = b; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest) + 1;
      nb |= Blade{1} << (remap[static_cast<std::size_t>(i)] - 1);
    }
    kept.emplace_back(nb, c);
  }
  return make_alt<Variance::form>(next, alpha.k, std::move(kept));
}

bool verify_negdet_certificate(const GLElement& g, const KVector& xi) {
  return sgn(g.det) < 0 && act(g, xi) == xi;
}

bool verify_negdet_certificate(const GLElement& g, const KForm& alpha) {
  return sgn(g.det) < 0 && act(g, alpha) == alpha;
}

}  // namespace kforms
