#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "kforms/catalog.hpp"

namespace kforms {

/// Pseudorandom element of GL(n, Q): a signed monomial matrix composed with a
/// few unit shears, so the determinant stays +/- a power of two and entries
/// stay small. det_sign > 0 (or < 0) forces the sign of the determinant; 0
/// leaves it random. Uses raw engine draws only, so results are stable across
/// platforms.
[[nodiscard]] GLElement random_gl(int n, std::mt19937_64& rng, int det_sign = 0);

/// Sparse random k-vector with coefficients in {-2,...,2}, for property
/// tests.
[[nodiscard]] KVector random_kvector(int n, int k, std::mt19937_64& rng);

/// Deterministic sample from an orbit: act(g, rep) for a seeded random g,
/// with det(g) > 0 forced on orientation-split entries. Throws
/// std::invalid_argument for unknown ids.
[[nodiscard]] KForm sample_orbit(const std::string& orbit_id, std::uint64_t seed);

}  // namespace kforms
