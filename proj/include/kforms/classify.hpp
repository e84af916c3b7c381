#pragma once

#include <string>
#include <vector>

#include "kforms/catalog.hpp"

namespace kforms {

struct Classification {
  std::string orbit_id;
  /// "exact" (decided by rank/zero tests), "fingerprint-unique" (a single
  /// catalog entry matches the computed invariants), or "ambiguous" (several
  /// match; candidates lists them and orbit_id is empty).
  std::string certainty;
  std::vector<std::string> candidates;
};

/// Assigns the orbit of alpha within a finite case. Throws
/// InfiniteFamilyError for the two unbounded families and
/// std::invalid_argument outside the table. Never guesses: if the invariants
/// do not single out an entry, the result is ambiguous.
[[nodiscard]] Classification classify(const KForm& alpha);

}  // namespace kforms
