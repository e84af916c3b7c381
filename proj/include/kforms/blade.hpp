#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace kforms {

/// A blade is a strictly increasing tuple of indices from {1..n}, stored as a
/// bitmask: bit (i-1) set means index i is present. n is capped at 32.
using Blade = std::uint32_t;

inline constexpr int kMaxDim = 32;

[[nodiscard]] inline int blade_grade(Blade b) { return std::popcount(b); }

/// Indices of b in ascending order (1-based).
[[nodiscard]] std::vector<int> blade_indices(Blade b);

/// Builds a blade from 1-based indices. Throws std::invalid_argument on
/// duplicates or out-of-range values; the order of the input is irrelevant
/// (callers needing the permutation sign handle it themselves).
[[nodiscard]] Blade blade_from_indices(const std::vector<int>& indices);

/// Sign of e_a ^ e_b as +1/-1, or 0 when the blades share an index.
[[nodiscard]] inline int wedge_sign(Blade a, Blade b) {
  if ((a & b) != 0) return 0;
  int inversions = 0;
  for (Blade rest = a; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    inversions += std::popcount(b & ((Blade{1} << bit) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

/// 0-based position of index i (1-based) within the ascending tuple of s.
[[nodiscard]] inline int blade_position(Blade s, int i) {
  return std::popcount(s & ((Blade{1} << (i - 1)) - 1));
}

/// Lexicographic order on ascending index tuples; this is the canonical term
/// order everywhere (it differs from numeric mask order: {1,4} < {2,3}).
[[nodiscard]] bool blade_lex_less(Blade a, Blade b);

/// All grade-k blades on {1..n} in canonical (lexicographic) order.
[[nodiscard]] std::vector<Blade> blades_of_grade(int n, int k);

/// Compact form: "e123"; brace form used when any index exceeds 9: "e{1,10}".
/// The empty blade formats as "1" (callers usually special-case grade 0).
[[nodiscard]] std::string format_blade(Blade b);

}  // namespace kforms
