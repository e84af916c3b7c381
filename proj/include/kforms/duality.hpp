#pragma once

#include "kforms/catalog.hpp"

namespace kforms {

/// Dualizes a complete catalog in grade k (entries read as k-vectors) into
/// the (n-k)-form catalog via zeta -> c(zeta) = iota_zeta Omega.
///
/// c(zeta) and -c(zeta) land in one orbit iff some h satisfies
/// h.zeta = -det(h) zeta. Per source entry that resolves to:
///   - n-k odd: always merged (scalars h = lambda id suffice);
///   - degenerate zeta: merged (reflect an annihilator vector);
///   - non-degenerate 2-vectors (top rank): merged iff n = 0 mod 4
///     (flip every odd coordinate), split into a +/- pair otherwise;
///   - non-degenerate odd-grade zeta: merged iff the source carries a
///     negative-determinant certificate.
/// Split pairs are emitted adjacently with orientation tags. The output size
/// must hit the published count for (n, n-k) or the derivation throws.
[[nodiscard]] Catalog derive_by_duality(const Catalog& source);

/// True when the two duals of this source entry merge into one orbit.
[[nodiscard]] bool duality_merges(const CatalogEntry& source);

}  // namespace kforms
