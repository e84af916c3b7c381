#pragma once

namespace kforms::detail {

/// Embedded copy of data/catalog_{n}_{k}.json, or nullptr when the case has
/// no curated data file.
[[nodiscard]] const char* embedded_catalog(int n, int k);

}  // namespace kforms::detail
