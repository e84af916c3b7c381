#include "kforms/blade.hpp"

#include <stdexcept>

namespace kforms {

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  out.reserve(blade_grade(b));
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

Blade blade_from_indices(const std::vector<int>& indices) {
  Blade b = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDim) throw std::invalid_argument("blade index out of range");
    const Blade bit = Blade{1} << (i - 1);
    if (b & bit) throw std::invalid_argument("duplicate blade index");
    b |= bit;
  }
  return b;
}

bool blade_lex_less(Blade a, Blade b) {
  // Compare ascending tuples entry by entry; a proper prefix sorts first.
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::vector<Blade> blades_of_grade(int n, int k) {
  if (n < 0 || n > kMaxDim || k < 0) throw std::invalid_argument("bad (n,k)");
  std::vector<Blade> out;
  if (k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Odometer over ascending index tuples; lexicographic by construction.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    Blade b = 0;
    for (int i : idx) b |= Blade{1} << (i - 1);
    out.push_back(b);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::string format_blade(Blade b) {
  if (b == 0) return "1";
  const auto idx = blade_indices(b);
  if (idx.back() <= 9) {
    std::string s = "e";
    for (int i : idx) s += static_cast<char>('0' + i);
    return s;
  }
  std::string s = "e{";
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(idx[j]);
  }
  s += '}';
  return s;
}

}  // namespace kforms
