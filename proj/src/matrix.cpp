#include "kforms/matrix.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace kforms {

QMat identity_matrix(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat transpose(const QMat& m) {
  QMat t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

QMat operator*(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
  QMat out(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r) {
    for (int i = 0; i < x.cols; ++i) {
      const Rat& v = x.at(r, i);
      if (is_zero(v)) continue;
      for (int c = 0; c < y.cols; ++c) {
        if (!is_zero(y.at(i, c))) out.at(r, c) += v * y.at(i, c);
      }
    }
  }
  return out;
}

QMat operator+(const QMat& x, const QMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix sum shape mismatch");
  QMat out(x.rows, x.cols);
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = x.a[i] + y.a[i];
  return out;
}

QMat scale(const Rat& c, const QMat& m) {
  QMat out = m;
  for (auto& v : out.a) v *= c;
  return out;
}

Rat determinant(QMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows;
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!is_zero(m.at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      for (int c = col; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = -det;
    }
    const Rat p = m.at(col, col);
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (is_zero(m.at(r, col))) continue;
      const Rat f = m.at(r, col) / p;
      for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

Rref rref(QMat m) {
  Rref out;
  out.pivot_cols.clear();
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows; ++r) {
      if (!is_zero(m.at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
    }
    const Rat p = m.at(row, col);
    for (int c = 0; c < m.cols; ++c) m.at(row, c) /= p;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || is_zero(m.at(r, col))) continue;
      const Rat f = m.at(r, col);
      for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

QMat nullspace_rows(const QMat& m) {
  const Rref r = rref(m);
  std::vector<int> free_cols;
  {
    std::size_t pi = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (pi < r.pivot_cols.size() && r.pivot_cols[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  QMat out(static_cast<int>(free_cols.size()), m.cols);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const int f = free_cols[i];
    out.at(static_cast<int>(i), f) = 1;
    for (int pr = 0; pr < r.rank(); ++pr) {
      out.at(static_cast<int>(i), r.pivot_cols[pr]) = -r.m.at(pr, f);
    }
  }
  return out;
}

QMat inverse(const QMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows;
  QMat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  const Rref red = rref(std::move(aug));
  if (red.rank() != n || red.pivot_cols.back() >= n ||
      red.pivot_cols.front() != 0) {
    throw std::invalid_argument("matrix is singular");
  }
  for (int i = 0; i < n; ++i) {
    if (red.pivot_cols[i] != i) throw std::invalid_argument("matrix is singular");
  }
  QMat out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = red.m.at(r, n + c);
  return out;
}

GLElement make_gl(QMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("GL element must be square");
  Rat d = determinant(m);
  if (is_zero(d)) throw std::invalid_argument("GL element must be invertible");
  return GLElement{std::move(m), std::move(d)};
}

GLElement gl_identity(int n) { return GLElement{identity_matrix(n), Rat(1)}; }

GLElement operator*(const GLElement& x, const GLElement& y) {
  return GLElement{x.m * y.m, x.det * y.det};
}

GLElement gl_inverse(const GLElement& g) {
  return GLElement{inverse(g.m), Rat(1) / g.det};
}

namespace {

QMat matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a nonempty array");
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) {
      throw std::invalid_argument("matrix JSON rows must be nonempty arrays");
    }
    std::vector<Rat> out_row;
    for (const auto& entry : row) {
      if (entry.is_number_integer()) {
        out_row.emplace_back(static_cast<long>(entry.get<long long>()));
      } else if (entry.is_string()) {
        out_row.push_back(parse_rational(entry.get<std::string>()));
      } else {
        throw std::invalid_argument("matrix JSON entries must be integers or rational strings");
      }
    }
    rows.push_back(std::move(out_row));
  }
  QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
  }
  return m;
}

}  // namespace

QMat parse_matrix(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty matrix");
  if (text[first] == '[') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, true);
    return matrix_from_json(j);
  }
  std::vector<std::vector<Rat>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    std::string row_text = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    std::vector<Rat> row;
    std::size_t rpos = 0;
    while (rpos <= row_text.size()) {
      std::size_t comma = row_text.find(',', rpos);
      std::string cell =
          row_text.substr(rpos, comma == std::string::npos ? std::string::npos : comma - rpos);
      const std::size_t b = cell.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) throw std::invalid_argument("empty matrix entry");
      const std::size_t e = cell.find_last_not_of(" \t\r\n");
      row.push_back(parse_rational(cell.substr(b, e - b + 1)));
      if (comma == std::string::npos) break;
      rpos = comma + 1;
    }
    rows.push_back(std::move(row));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
  }
  return m;
}

std::string format_matrix(const QMat& m) {
  std::string out;
  for (int r = 0; r < m.rows; ++r) {
    if (r) out += ';';
    for (int c = 0; c < m.cols; ++c) {
      if (c) out += ',';
      out += format_rational(m.at(r, c));
    }
  }
  return out;
}

}  // namespace kforms
