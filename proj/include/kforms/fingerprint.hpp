#pragma once

#include <string>

#include "json.hpp"
#include "kforms/invariants.hpp"

namespace kforms {

/// Canonical JSON orbit fingerprint with fixed field order
/// (n, k, kernel_dim, support_dim, stabilizer_dim, stable, special,
/// restriction), so serialized fingerprints are byte-stable.
using Fingerprint = nlohmann::ordered_json;

/// The per-case special invariant, or null: two_form_rank for k = 2,
/// hitchin_sign for (6,3), the ordered b_signature for (7,3) and (via the
/// inverse Hodge dual) for (7,4), and the dual 2-vector data for k = n-2
/// with k >= 3.
[[nodiscard]] Fingerprint special_invariant(const KForm& alpha);

/// Full fingerprint; recursively fingerprints the restriction to a
/// complement of the annihilator when alpha is degenerate and nonzero.
[[nodiscard]] Fingerprint fingerprint(const KForm& alpha);

/// Fingerprint with the top-level (7,3) B-signature sorted, making it a full
/// GL-orbit invariant (the ordered variant distinguishes det>0 cosets only;
/// nested restriction fingerprints are already stored sorted).
[[nodiscard]] Fingerprint orbit_canonical_fingerprint(const Fingerprint& f);

/// Compact canonical serialization, suitable as a hash key.
[[nodiscard]] std::string fingerprint_key(const Fingerprint& f);

[[nodiscard]] const char* sign_string(int s);

}  // namespace kforms
