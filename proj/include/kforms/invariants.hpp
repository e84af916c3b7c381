#pragma once

#include <vector>

#include "kforms/action.hpp"
#include "kforms/subspace.hpp"

namespace kforms {

/// Matrix of v -> iota_v alpha in the blade bases (rows: (k-1)-blades in
/// canonical order, cols: e_1..e_n), over primitive integer coefficients.
/// Requires k >= 1.
[[nodiscard]] IntMat interior_matrix(const KForm& alpha);

/// Kernel of v -> iota_v alpha. For k = 0 the convention is: the zero scalar
/// has annihilator V, any other scalar has annihilator {0}.
[[nodiscard]] Subspace annihilator(const KForm& alpha);
[[nodiscard]] int kernel_dim(const KForm& alpha);
[[nodiscard]] bool is_nondegenerate(const KForm& alpha);

/// Smallest subspace W with xi in Lambda^k(W): the span of all contractions
/// of xi by (k-1)-coforms. Scalars (k = 0) have support {0}.
[[nodiscard]] Subspace support(const KVector& xi);
[[nodiscard]] int support_dim(const KVector& xi);

/// Rank of X -> X.a over gl(n); the orbit dimension.
[[nodiscard]] int orbit_tangent_rank(const KForm& alpha);
[[nodiscard]] int orbit_tangent_rank(const KVector& xi);
[[nodiscard]] int stabilizer_dim(const KForm& alpha);
[[nodiscard]] int stabilizer_dim(const KVector& xi);

/// A form is stable exactly when its orbit is open, i.e. the infinitesimal
/// action is surjective onto Lambda^k.
[[nodiscard]] bool is_stable(const KForm& alpha);
[[nodiscard]] bool is_stable(const KVector& xi);

/// Basis of the stabilizer algebra {X in gl(n) : X.a = 0}.
[[nodiscard]] std::vector<QMat> stabilizer_basis(const KForm& alpha);
[[nodiscard]] std::vector<QMat> stabilizer_basis(const KVector& xi);

struct SymmetricForm {
  int n = 0;
  QMat m;
};
[[nodiscard]] SymmetricForm make_symmetric_form(QMat m);

struct Signature {
  int pos = 0;
  int zero = 0;
  int neg = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Sylvester signature by exact symmetric congruence diagonalization.
[[nodiscard]] Signature signature(const SymmetricForm& s);

/// Gram matrix tr(X_a X_b) of a tuple of square matrices. Its signature on a
/// stabilizer basis is conjugation-invariant, hence an orbit invariant.
[[nodiscard]] SymmetricForm trace_gram(const std::vector<QMat>& mats);

/// c(xi) = iota_xi Omega for the standard volume form Omega = e^{1..n}, and
/// its inverse (a signed bijection on blades).
[[nodiscard]] KForm hodge_dual(const KVector& xi);
[[nodiscard]] KVector inverse_hodge_dual(const KForm& rho);

/// Rank of the antisymmetric Gram matrix; requires grade 2. Always even.
[[nodiscard]] int two_form_rank(const KForm& alpha);
[[nodiscard]] int two_vector_rank(const KVector& xi);

/// Sign of lambda(alpha) = tr(K^2)/6 for 3-forms on R^6, where K: V -> V is
/// defined by c(K v) = (iota_v alpha) ^ alpha. Separates the three
/// non-degenerate classes: +, - on the two open orbits, 0 elsewhere.
[[nodiscard]] int hitchin_sign(const KForm& alpha);

/// B_phi(u, v) Omega = iota_u phi ^ iota_v phi ^ phi for 3-forms on R^7.
/// Transformation law: B_{g.phi} = det(g) times the g-congruence of B_phi,
/// so the ordered signature is invariant under det > 0 and the (p,q) pair
/// swaps under det < 0.
[[nodiscard]] SymmetricForm b_form(const KForm& phi);
[[nodiscard]] Signature b_signature(const KForm& phi);

/// Invariants of the dual 2-vector zeta = c^{-1}(rho) of an (n-2)-form.
/// top_sign is the sign of the coefficient of e_{1..n} in zeta^(n/2), set
/// only when the rank is n; it is a full GL-invariant exactly when
/// n = 2 mod 4 (the twist det(g)^{n/2 - 1} is then an even power).
struct DualTwoVector {
  int rank = 0;
  int top_sign = 0;
};
[[nodiscard]] DualTwoVector dual_two_vector(const KForm& rho);

/// Same coefficients in a larger ambient space; the result is degenerate with
/// e_{n+1}..e_{new_n} in the annihilator.
[[nodiscard]] KForm embed_form(const KForm& alpha, int new_n);

/// Restriction of a degenerate form to a complement of its annihilator,
/// renumbered to standard position. Well defined up to orbit. Non-degenerate
/// input is returned unchanged. The second overload reuses a precomputed
/// annihilator.
[[nodiscard]] KForm reduce_degenerate(const KForm& alpha);
[[nodiscard]] KForm reduce_degenerate(const KForm& alpha, const Subspace& ann);

/// True iff g fixes the value exactly and det(g) < 0.
[[nodiscard]] bool verify_negdet_certificate(const GLElement& g, const KVector& xi);
[[nodiscard]] bool verify_negdet_certificate(const GLElement& g, const KForm& alpha);

}  // namespace kforms
