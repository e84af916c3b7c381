#include "kforms/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace kforms {

Subspace::Subspace(const QMat& rows, int ambient_dim) : ambient_(ambient_dim) {
  if (rows.cols != ambient_dim && rows.rows != 0) {
    throw std::invalid_argument("subspace rows do not match ambient dimension");
  }
  if (rows.rows == 0) {
    basis_ = QMat(0, ambient_dim);
    return;
  }
  const Rref r = rref(rows);
  QMat b(r.rank(), ambient_dim);
  for (int i = 0; i < r.rank(); ++i) {
    for (int c = 0; c < ambient_dim; ++c) b.at(i, c) = r.m.at(i, c);
  }
  basis_ = std::move(b);
}

Subspace Subspace::full(int ambient_dim) {
  return Subspace(identity_matrix(ambient_dim), ambient_dim);
}

Subspace Subspace::zero(int ambient_dim) {
  return Subspace(QMat(0, ambient_dim), ambient_dim);
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw std::invalid_argument("vector does not match ambient dimension");
  }
  // Reduce v against the RREF basis; membership iff the residue vanishes.
  std::vector<Rat> r = v;
  for (int i = 0; i < basis_.rows; ++i) {
    int pivot = -1;
    for (int c = 0; c < ambient_; ++c) {
      if (!is_zero(basis_.at(i, c))) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    const Rat f = r[static_cast<std::size_t>(pivot)];
    if (is_zero(f)) continue;
    for (int c = pivot; c < ambient_; ++c) {
      r[static_cast<std::size_t>(c)] -= f * basis_.at(i, c);
    }
  }
  for (const Rat& x : r) {
    if (!is_zero(x)) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (int i = 0; i < other.basis_.rows; ++i) {
    std::vector<Rat> row(static_cast<std::size_t>(ambient_));
    for (int c = 0; c < ambient_; ++c) row[static_cast<std::size_t>(c)] = other.basis_.at(i, c);
    if (!contains(row)) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.basis_.rows != b.basis_.rows) return false;
  return a.basis_.a == b.basis_.a;
}

std::vector<int> pivot_coordinates(const Subspace& s) {
  std::vector<int> out;
  const QMat& b = s.basis();
  for (int i = 0; i < b.rows; ++i) {
    for (int c = 0; c < b.cols; ++c) {
      if (!is_zero(b.at(i, c))) {
        out.push_back(c + 1);
        break;
      }
    }
  }
  return out;
}

std::string format_subspace(const Subspace& s) {
  std::ostringstream os;
  os << "span{";
  for (int i = 0; i < s.basis().rows; ++i) {
    if (i > 0) os << "; ";
    for (int c = 0; c < s.ambient_dim(); ++c) {
      if (c > 0) os << ",";
      os << format_rational(s.basis().at(i, c));
    }
  }
  os << "}";
  return os.str();
}

}  // namespace kforms
