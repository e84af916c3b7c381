#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kforms/fingerprint.hpp"
#include "kforms/matrix.hpp"
#include "kforms/multivector.hpp"

namespace kforms {

/// One orbit representative. Orientation-split pairs (two orbits exchanged by
/// det < 0 transformations) are stored as two adjacent entries sharing a base
/// form, tagged +1 / -1; all other entries have orientation 0.
struct CatalogEntry {
  std::string id;  // "{n}-{k}-{index}", index 1-based, two digits
  int n = 0;
  int k = 0;
  KForm rep;
  bool degenerate = false;
  bool stable = false;
  std::string provenance;  // "paper" | "construction" | "literature"
  std::optional<GLElement> negdet_certificate;
  int orientation = 0;
  std::string notes;
};

struct Catalog {
  int n = 0;
  int k = 0;
  std::vector<CatalogEntry> entries;
};

/// Orbit counts for one (n,k) cell; `infinite` marks the two unbounded
/// families, in which case the numeric fields are meaningless.
struct CaseCounts {
  int n = 0;
  int k = 0;
  bool infinite = false;
  int total = 0;
  int nondegenerate = 0;
  int stable = 0;
  friend bool operator==(const CaseCounts&, const CaseCounts&) = default;
};

/// Raised when a catalog or classification is requested for one of the two
/// infinite families; `row` names the offending table row.
class InfiniteFamilyError : public std::runtime_error {
 public:
  InfiniteFamilyError(int n, int k, std::string row_name)
      : std::runtime_error("infinite orbit family: " + row_name),
        n_(n),
        k_(k),
        row_(std::move(row_name)) {}
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] const std::string& row() const { return row_; }

 private:
  int n_, k_;
  std::string row_;
};

/// Finite cases for 2 <= n <= 9: k in {0,1,2,n-2,n-1,n} plus the curated and
/// derived cells (6,3), (7,3), (8,3), (7,4), (8,5).
[[nodiscard]] bool is_finite_case(int n, int k);
[[nodiscard]] bool is_infinite_case(int n, int k);
[[nodiscard]] std::string infinite_row_name(int n, int k);

/// The published per-cell counts (the constants the computed table is checked
/// against). Throws std::invalid_argument outside 2 <= n <= 9, 0 <= k <= n.
[[nodiscard]] CaseCounts expected_counts(int n, int k);

/// The full representative catalog for a finite case, built once and cached:
/// small k and k near n by closed-form construction, k = n-2 / (7,4) / (8,5)
/// by dualizing a source catalog, (6,3) / (7,3) / (8,3) from curated data.
/// Entry flags are recomputed at load; a stored flag that disagrees with the
/// recomputation is a hard error.
[[nodiscard]] const Catalog& builtin_catalog(int n, int k);

/// Entry lookup by id ("7-3-09"); nullptr when unknown or the id names an
/// infinite cell.
[[nodiscard]] const CatalogEntry* find_entry(const std::string& id);

/// Fingerprint of a catalog entry, computed on demand and cached by id.
[[nodiscard]] const Fingerprint& entry_fingerprint(const CatalogEntry& entry);

/// Redirects the curated cases to catalog_{n}_{k}.json files under `dir`
/// (falling back to the embedded copies when a file is absent) and clears the
/// cache. Pass an empty string to restore the embedded data.
void set_catalog_directory(const std::string& dir);

/// Parses the JSON catalog interchange format (an array of entry objects).
/// Certificates are verified, flags are recomputed and checked.
[[nodiscard]] Catalog parse_catalog_json(const std::string& text, int n, int k);
[[nodiscard]] std::string catalog_to_json(const Catalog& catalog);

namespace detail {
/// Verifies and completes a raw entry: recomputes flags, checks a stored
/// certificate, and for degenerate entries (k >= 1) without one constructs
/// the reflection certificate g(a) = -a for an annihilator vector a (it fixes
/// the form exactly and has determinant -1).
void finalize_entry(CatalogEntry& entry, bool check_stored_flags, bool stored_degenerate,
                    bool stored_stable);
}  // namespace detail

}  // namespace kforms
