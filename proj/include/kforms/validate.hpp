#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kforms/catalog.hpp"

namespace kforms {

/// Validation report for one finite case:
///   {case, counts, separation_matrix, collisions, certificate_audit}
/// counts compares recomputed totals/flags against the published constants;
/// separation_matrix is the pairwise fingerprint-distinctness matrix;
/// collisions lists colliding pairs, each explained only by a literature
/// provenance annotation on both entries; certificate_audit verifies the
/// negative-determinant certificates and, for (7,3), the 6+2 accounting and
/// the B-signature non-existence argument for the stable pair.
[[nodiscard]] nlohmann::ordered_json validation_report(int n, int k);
[[nodiscard]] bool validation_ok(const nlohmann::ordered_json& report);

/// Degenerate entries of (n,k) against the whole catalog of (n-1,k): count
/// equality and a one-to-one fingerprint matching of embedded lower
/// representatives to degenerate upper entries.
[[nodiscard]] bool lemma2_applicable(int n, int k);
[[nodiscard]] std::vector<std::pair<int, int>> lemma2_pairs(int n_max = 9);
[[nodiscard]] nlohmann::ordered_json lemma2_consistency(int n, int k);

/// Randomized property suites, shared by `selfcheck` and the test binaries.
/// Each returns {suite, pass, trials, failures:[...]} and is deterministic
/// under a fixed seed.
[[nodiscard]] nlohmann::ordered_json suite_equivariance(std::uint64_t seed, int trials);
[[nodiscard]] nlohmann::ordered_json suite_lemma2();
[[nodiscard]] nlohmann::ordered_json suite_certificates();
[[nodiscard]] nlohmann::ordered_json suite_roundtrip(std::uint64_t seed, int trials);

/// All four suites, ordered by suite name; "pass" aggregates.
[[nodiscard]] nlohmann::ordered_json selfcheck(std::uint64_t seed, int trials);

}  // namespace kforms
