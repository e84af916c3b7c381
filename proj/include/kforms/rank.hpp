#pragma once

#include <vector>

#include "kforms/matrix.hpp"

namespace kforms {

/// Integer matrix used by the exact rank/kernel kernels. Row-wise denominator
/// clearing keeps both the rank and the (right) kernel of the rational
/// original.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  [[nodiscard]] mpz_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  [[nodiscard]] const mpz_class& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

[[nodiscard]] IntMat int_matrix_rows_cleared(const QMat& m);

/// Exact rank by fraction-free (Bareiss) elimination, escalating the integer
/// type int64 -> int128 -> mpz as entries grow. Always correct; no modular
/// shortcuts.
[[nodiscard]] int rank_exact(IntMat m);

/// Exact rank and right-kernel basis. Fast path: RREF modulo one or two
/// word-size primes gives a candidate (the modular rank is always a lower
/// bound for the rational rank, witnessed by a pivot minor); the candidate
/// kernel is lifted by rational reconstruction and then verified exactly over
/// Z, which certifies the matching upper bound. Any failure falls back to
/// exact rational elimination, so primes only ever affect speed.
struct KernelResult {
  int rank = 0;
  QMat kernel;      // rows = kernel basis, RREF-canonical
  bool fast_path = false;
};
[[nodiscard]] KernelResult kernel_exact(const IntMat& m);

/// Plain rational elimination; reference oracle for the kernels above.
[[nodiscard]] int rank_reference(const QMat& m);

}  // namespace kforms
