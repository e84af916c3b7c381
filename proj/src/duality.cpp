#include "kforms/duality.hpp"

#include <cstdio>

#include "kforms/invariants.hpp"

namespace kforms {

bool duality_merges(const CatalogEntry& source) {
  const int n = source.n;
  const int k = source.k;
  // Scalars: h = lambda id gives h.zeta = lambda^k zeta and -det(h) =
  // -lambda^n, solvable over R exactly when n - k is odd.
  if ((n - k) % 2 != 0) return true;
  // Reflect an annihilator vector: fixes zeta, det -1.
  if (source.degenerate) return true;
  if (k % 2 == 0) {
    // Non-degenerate 2-vector, top rank: negating every odd coordinate sends
    // zeta to -zeta with det (-1)^(n/2), as required iff n = 0 mod 4. For
    // n = 2 mod 4 no h exists: h.zeta = -det(h) zeta forces
    // det(h)^(n/2 - 1) = -1 with an even exponent.
    return n % 4 == 0;
  }
  return source.negdet_certificate.has_value();
}

Catalog derive_by_duality(const Catalog& source) {
  const int n = source.n;
  const int k = source.k;
  const CaseCounts source_counts = expected_counts(n, k);
  if (source_counts.infinite ||
      static_cast<int>(source.entries.size()) != source_counts.total) {
    throw std::runtime_error("duality source catalog is incomplete");
  }
  Catalog out{n, n - k, {}};
  for (const CatalogEntry& src : source.entries) {
    const KForm rho = hodge_dual(as_multivector(src.rep));
    CatalogEntry base;
    base.n = n;
    base.k = n - k;
    base.rep = rho;
    // Inequivalence of duals follows from inequivalence of the sources, so
    // the classification authority carries over unchanged.
    base.provenance = src.provenance;
    const std::string why = src.notes.empty() ? std::string{} : "; " + src.notes;
    if (duality_merges(src)) {
      base.notes = "dual of " + src.id + why;
      out.entries.push_back(std::move(base));
    } else {
      CatalogEntry neg = base;
      base.orientation = 1;
      base.notes = "dual of " + src.id + ", + orientation" + why;
      neg.orientation = -1;
      neg.rep = -rho;
      neg.notes = "dual of " + src.id + ", - orientation" + why;
      out.entries.push_back(std::move(base));
      out.entries.push_back(std::move(neg));
    }
  }
  const CaseCounts expect = expected_counts(n, n - k);
  if (static_cast<int>(out.entries.size()) != expect.total) {
    throw std::runtime_error("duality count mismatch for (" + std::to_string(n) + "," +
                             std::to_string(n - k) + "): derived " +
                             std::to_string(out.entries.size()) + ", expected " +
                             std::to_string(expect.total));
  }
  int index = 1;
  for (CatalogEntry& e : out.entries) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%d-%d-%02d", e.n, e.k, index++);
    e.id = buf;
    detail::finalize_entry(e, false, false, false);
  }
  return out;
}

}  // namespace kforms
