#pragma once

#include <string>
#include <vector>

#include "kforms/catalog.hpp"

namespace kforms {

/// Orbit counts for every cell 2 <= n <= n_max, 1 <= k <= n, recomputed from
/// the catalogs (total = entries, nondegenerate / stable = entries passing
/// the recomputed predicates); the two unbounded families carry the infinite
/// flag.
[[nodiscard]] std::vector<CaseCounts> theorem_table(int n_max = 9);

/// Compares a computed table against the published constants cell by cell.
/// Returns one message per mismatch, empty when everything agrees.
[[nodiscard]] std::vector<std::string> verify_table(const std::vector<CaseCounts>& computed);

/// Plain-text rendering, one line per cell, infinity markers spelled "inf".
[[nodiscard]] std::string format_table(const std::vector<CaseCounts>& table);

[[nodiscard]] nlohmann::ordered_json table_json(const std::vector<CaseCounts>& table);

}  // namespace kforms
