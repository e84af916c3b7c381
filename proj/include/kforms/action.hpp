#pragma once

#include "kforms/matrix.hpp"
#include "kforms/multivector.hpp"
#include "kforms/rank.hpp"

namespace kforms {

/// Pushforward of a k-vector: each factor e_i is replaced by the i-th column
/// of g and the wedges are expanded (the k-th compound of g in blade basis).
[[nodiscard]] KVector act(const GLElement& g, const KVector& xi);

/// Action on k-forms, defined so that (g . alpha)(xi) = alpha(g . xi) for all
/// k-vectors xi. In coordinates this is the compound of g^T applied to the
/// coefficient vector.
[[nodiscard]] KForm act(const GLElement& g, const KForm& alpha);

/// Derivative of the action along X in gl(n): the Leibniz rule
/// X.(v1^...^vk) = sum_i v1^...^(X vi)^...^vk, and the matching derivative on
/// forms. X is an arbitrary n x n matrix, X e_j = sum_i X(i,j) e_i.
[[nodiscard]] KVector infinitesimal_action(const QMat& x, const KVector& xi);
[[nodiscard]] KForm infinitesimal_action(const QMat& x, const KForm& alpha);

/// Matrix of the map gl(n) -> Lambda^k, X |-> X.a, with rows indexed by
/// blades_of_grade(n, k) in canonical order and columns by the matrix units
/// E_ij in row-major order (column (i-1)*n + (j-1)). The input is rescaled to
/// primitive integer coefficients first, so the matrix is integral; its rank
/// (the orbit tangent dimension) is unchanged by the rescale.
[[nodiscard]] IntMat tangent_matrix(const KForm& alpha);
[[nodiscard]] IntMat tangent_matrix(const KVector& xi);

}  // namespace kforms
