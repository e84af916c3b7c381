#pragma once

#include <string>
#include <vector>

#include "kforms/rational.hpp"

namespace kforms {

/// Dense row-major rational matrix. Small (n <= 32 rows/cols for GL elements;
/// up to C(9,4) x 81 for tangent maps), so the representation stays simple.
struct QMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

  [[nodiscard]] Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  [[nodiscard]] const Rat& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  friend bool operator==(const QMat& x, const QMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

[[nodiscard]] QMat identity_matrix(int n);
[[nodiscard]] QMat transpose(const QMat& m);
[[nodiscard]] QMat operator*(const QMat& x, const QMat& y);
[[nodiscard]] QMat operator+(const QMat& x, const QMat& y);
[[nodiscard]] QMat scale(const Rat& c, const QMat& m);

[[nodiscard]] Rat determinant(QMat m);
/// Throws std::invalid_argument when singular.
[[nodiscard]] QMat inverse(const QMat& m);

/// Reduced row echelon form over Q with pivot column tracking.
struct Rref {
  QMat m;
  std::vector<int> pivot_cols;
  [[nodiscard]] int rank() const { return static_cast<int>(pivot_cols.size()); }
};
[[nodiscard]] Rref rref(QMat m);

/// Basis of {x : m x = 0} as rows in RREF-canonical order (free variable set
/// ascending, each vector 1 at its free column).
[[nodiscard]] QMat nullspace_rows(const QMat& m);

/// Invertible n x n matrix with its determinant cached.
struct GLElement {
  QMat m;
  Rat det;
  [[nodiscard]] int n() const { return m.rows; }
};
[[nodiscard]] GLElement make_gl(QMat m);
[[nodiscard]] GLElement gl_identity(int n);
[[nodiscard]] GLElement operator*(const GLElement& x, const GLElement& y);
[[nodiscard]] GLElement gl_inverse(const GLElement& g);

/// Text format "1,0;1/2,1" (rows by ';', entries by ','), or a JSON
/// array-of-arrays whose entries are integers or rational strings.
[[nodiscard]] QMat parse_matrix(const std::string& text);
[[nodiscard]] std::string format_matrix(const QMat& m);

}  // namespace kforms
