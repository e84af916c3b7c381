#include "kforms/classify.hpp"

#include "kforms/invariants.hpp"

namespace kforms {

namespace {

const CatalogEntry& single_entry(const Catalog& cat, bool want_zero) {
  for (const CatalogEntry& e : cat.entries) {
    if (e.rep.is_zero() == want_zero) return e;
  }
  throw std::logic_error("catalog is missing the zero entry");
}

/// Extra separating data for fingerprint collisions: the signature of the
/// trace form on the stabilizer algebra, invariant under conjugation. In the
/// catalogs shipped here it splits every colliding fingerprint group.
std::vector<int> discriminator(const KForm& alpha) {
  const Signature s = signature(trace_gram(stabilizer_basis(alpha)));
  return {s.pos, s.zero, s.neg};
}

}  // namespace

Classification classify(const KForm& alpha) {
  const int n = alpha.n;
  const int k = alpha.k;
  if (is_infinite_case(n, k)) {
    throw InfiniteFamilyError(n, k, infinite_row_name(n, k));
  }
  const Catalog& cat = builtin_catalog(n, k);
  Classification out;
  if (k == 0 || k == 1 || k == n - 1 || k == n) {
    out.orbit_id = single_entry(cat, alpha.is_zero()).id;
    out.certainty = "exact";
    return out;
  }
  if (k == 2) {
    const int rank = two_form_rank(alpha);
    for (const CatalogEntry& e : cat.entries) {
      if (two_form_rank(e.rep) == rank) {
        out.orbit_id = e.id;
        out.certainty = "exact";
        return out;
      }
    }
    throw std::logic_error("no catalog entry with the computed 2-form rank");
  }

  const Fingerprint f = fingerprint(alpha);
  std::vector<const CatalogEntry*> hits;
  for (const CatalogEntry& e : cat.entries) {
    if (entry_fingerprint(e) == f) hits.push_back(&e);
  }
  if (hits.empty()) {
    // A det<0 image of a (7,3)-type orbit carries the swapped ordered
    // B-signature; retry modulo that.
    const Fingerprint fc = orbit_canonical_fingerprint(f);
    for (const CatalogEntry& e : cat.entries) {
      if (orbit_canonical_fingerprint(entry_fingerprint(e)) == fc) hits.push_back(&e);
    }
  }
  if (hits.size() == 1) {
    out.orbit_id = hits.front()->id;
    out.certainty = "fingerprint-unique";
    return out;
  }
  if (hits.size() > 1) {
    const std::vector<int> d = discriminator(alpha);
    std::vector<const CatalogEntry*> narrowed;
    for (const CatalogEntry* e : hits) {
      if (discriminator(e->rep) == d) narrowed.push_back(e);
    }
    if (narrowed.size() == 1) {
      out.orbit_id = narrowed.front()->id;
      out.certainty = "fingerprint-unique";
      return out;
    }
    if (!narrowed.empty()) hits = std::move(narrowed);
  }
  out.certainty = "ambiguous";
  for (const CatalogEntry* e : hits) out.candidates.push_back(e->id);
  return out;
}

}  // namespace kforms
