#pragma once

#include <string>
#include <vector>

#include "kforms/matrix.hpp"

namespace kforms {

// Linear subspace of Q^n stored as the reduced row echelon basis of its
// spanning rows.  The RREF basis is a canonical form, so two Subspace values
// describe the same subspace exactly when their bases coincide.
class Subspace {
 public:
  Subspace() = default;

  // Spans the row space of `rows` inside Q^ambient_dim.
  Subspace(const QMat& rows, int ambient_dim);

  [[nodiscard]] static Subspace full(int ambient_dim);
  [[nodiscard]] static Subspace zero(int ambient_dim);

  [[nodiscard]] int dim() const { return basis_.rows; }
  [[nodiscard]] int ambient_dim() const { return ambient_; }
  [[nodiscard]] const QMat& basis() const { return basis_; }

  [[nodiscard]] bool contains(const std::vector<Rat>& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_ = 0;
  QMat basis_{0, 0};  // RREF, no zero rows.
};

// Column indices 1..n of the RREF pivots of the subspace basis.
[[nodiscard]] std::vector<int> pivot_coordinates(const Subspace& s);

[[nodiscard]] std::string format_subspace(const Subspace& s);

}  // namespace kforms
