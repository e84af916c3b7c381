#include "kforms/validate.hpp"

#include <algorithm>
#include <map>

#include "kforms/action.hpp"
#include "kforms/classify.hpp"
#include "kforms/invariants.hpp"
#include "kforms/sample.hpp"

namespace kforms {

namespace {

using Json = nlohmann::ordered_json;

std::string cell_name(int n, int k) { return std::to_string(n) + "-" + std::to_string(k); }

std::string canonical_key(const CatalogEntry& e) {
  return fingerprint_key(orbit_canonical_fingerprint(entry_fingerprint(e)));
}

Json counts_block(const Catalog& cat) {
  const CaseCounts want = expected_counts(cat.n, cat.k);
  const int total = static_cast<int>(cat.entries.size());
  const int nondeg = static_cast<int>(
      std::count_if(cat.entries.begin(), cat.entries.end(),
                    [](const CatalogEntry& e) { return !e.degenerate; }));
  const int stable = static_cast<int>(std::count_if(
      cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& e) { return e.stable; }));
  Json out;
  out["total"] = total;
  out["nondegenerate"] = nondeg;
  out["stable"] = stable;
  out["expected_total"] = want.total;
  out["expected_nondegenerate"] = want.nondegenerate;
  out["expected_stable"] = want.stable;
  out["match"] = total == want.total && nondeg == want.nondegenerate && stable == want.stable;
  return out;
}

Json certificate_audit(const Catalog& cat) {
  Json audit;
  Json entries = Json::array();
  int certified = 0;
  int degenerate_certified = 0;
  int nondeg_unstable_certified = 0;
  bool all_verified = true;
  for (const CatalogEntry& e : cat.entries) {
    Json row;
    row["id"] = e.id;
    row["has_certificate"] = e.negdet_certificate.has_value();
    if (e.negdet_certificate) {
      const bool ok = verify_negdet_certificate(*e.negdet_certificate, e.rep);
      row["verified"] = ok;
      all_verified = all_verified && ok;
      ++certified;
      if (e.degenerate) ++degenerate_certified;
      if (!e.degenerate && !e.stable) ++nondeg_unstable_certified;
    }
    entries.push_back(std::move(row));
  }
  audit["entries"] = std::move(entries);
  audit["certified"] = certified;
  audit["all_verified"] = all_verified;
  bool ok = all_verified;
  if (cat.n == 7 && cat.k == 3) {
    // 6 degenerate + 2 non-degenerate non-stable certificates; the stable
    // pair instead shows p != q in the B-signature, which rules a
    // negative-determinant stabilizer element out.
    audit["degenerate_certified"] = degenerate_certified;
    audit["nondegenerate_unstable_certified"] = nondeg_unstable_certified;
    bool stable_separated = true;
    Json stable_rows = Json::array();
    for (const CatalogEntry& e : cat.entries) {
      if (!e.stable) continue;
      const Signature s = b_signature(e.rep);
      Json row;
      row["id"] = e.id;
      row["b_signature"] = Json::array({s.pos, s.zero, s.neg});
      row["certificate_free"] = !e.negdet_certificate.has_value();
      stable_rows.push_back(std::move(row));
      stable_separated = stable_separated && s.pos != s.neg && !e.negdet_certificate;
    }
    audit["stable_entries"] = std::move(stable_rows);
    audit["stable_b_signature_distinct"] = stable_separated;
    ok = ok && certified == 8 && degenerate_certified == 6 &&
         nondeg_unstable_certified == 2 && stable_separated;
    audit["accounting_match"] = certified == 8 && degenerate_certified == 6 &&
                                nondeg_unstable_certified == 2;
  }
  audit["ok"] = ok;
  return audit;
}

}  // namespace

Json validation_report(int n, int k) {
  const Catalog& cat = builtin_catalog(n, k);
  const int total = static_cast<int>(cat.entries.size());
  Json rep;
  rep["case"] = cell_name(n, k);
  rep["counts"] = counts_block(cat);

  std::vector<std::string> keys;
  keys.reserve(static_cast<std::size_t>(total));
  for (const CatalogEntry& e : cat.entries) keys.push_back(canonical_key(e));
  Json matrix = Json::array();
  for (int i = 0; i < total; ++i) {
    Json row = Json::array();
    for (int j = 0; j < total; ++j) {
      row.push_back(i == j ? 1 : (keys[static_cast<std::size_t>(i)] !=
                                          keys[static_cast<std::size_t>(j)]
                                      ? 1
                                      : 0));
    }
    matrix.push_back(std::move(row));
  }
  rep["separation_matrix"] = std::move(matrix);

  Json collisions = Json::array();
  bool all_explained = true;
  for (int i = 0; i < total; ++i) {
    for (int j = i + 1; j < total; ++j) {
      if (keys[static_cast<std::size_t>(i)] != keys[static_cast<std::size_t>(j)]) continue;
      const CatalogEntry& a = cat.entries[static_cast<std::size_t>(i)];
      const CatalogEntry& b = cat.entries[static_cast<std::size_t>(j)];
      const bool literature = a.provenance == "literature" && b.provenance == "literature" &&
                              !a.notes.empty() && !b.notes.empty();
      Json c;
      c["pair"] = Json::array({a.id, b.id});
      c["provenance"] = Json::array({a.provenance, b.provenance});
      c["notes"] = Json::array({a.notes, b.notes});
      c["explained"] = literature;
      collisions.push_back(std::move(c));
      all_explained = all_explained && literature;
    }
  }
  rep["collisions"] = std::move(collisions);
  rep["certificate_audit"] = certificate_audit(cat);
  rep["ok"] = rep["counts"]["match"].get<bool>() && all_explained &&
              rep["certificate_audit"]["ok"].get<bool>();
  return rep;
}

bool validation_ok(const Json& report) { return report.value("ok", false); }

bool lemma2_applicable(int n, int k) {
  return k >= 1 && is_finite_case(n, k) && is_finite_case(n - 1, k);
}

std::vector<std::pair<int, int>> lemma2_pairs(int n_max) {
  std::vector<std::pair<int, int>> out;
  for (int n = 3; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (lemma2_applicable(n, k)) out.emplace_back(n, k);
    }
  }
  return out;
}

Json lemma2_consistency(int n, int k) {
  if (!lemma2_applicable(n, k)) throw std::invalid_argument("pair is not applicable");
  const Catalog& upper = builtin_catalog(n, k);
  const Catalog& lower = builtin_catalog(n - 1, k);
  Json rep;
  rep["pair"] = cell_name(n, k) + " vs " + cell_name(n - 1, k);

  std::vector<const CatalogEntry*> degenerate;
  for (const CatalogEntry& e : upper.entries) {
    if (e.degenerate) degenerate.push_back(&e);
  }
  rep["degenerate_upper"] = degenerate.size();
  rep["total_lower"] = lower.entries.size();
  const bool count_match = degenerate.size() == lower.entries.size();
  rep["count_match"] = count_match;

  // Group both sides by full-orbit fingerprint; one-to-one means the keyed
  // multiplicities agree (they are 1 except for annotated collisions).
  std::map<std::string, std::vector<std::string>> upper_by_key;
  for (const CatalogEntry* e : degenerate) upper_by_key[canonical_key(*e)].push_back(e->id);
  std::map<std::string, std::vector<std::string>> lower_by_key;
  for (const CatalogEntry& e : lower.entries) {
    const Fingerprint f = fingerprint(embed_form(e.rep, n));
    lower_by_key[fingerprint_key(orbit_canonical_fingerprint(f))].push_back(e.id);
  }
  bool matched = count_match;
  Json matching = Json::array();
  for (const auto& [key, lower_ids] : lower_by_key) {
    const auto it = upper_by_key.find(key);
    const std::vector<std::string> upper_ids =
        it == upper_by_key.end() ? std::vector<std::string>{} : it->second;
    if (upper_ids.size() != lower_ids.size()) matched = false;
    for (std::size_t i = 0; i < lower_ids.size(); ++i) {
      Json pair = Json::array();
      pair.push_back(lower_ids[i]);
      pair.push_back(i < upper_ids.size() ? Json(upper_ids[i]) : Json(nullptr));
      matching.push_back(std::move(pair));
    }
  }
  for (const auto& [key, upper_ids] : upper_by_key) {
    if (lower_by_key.find(key) == lower_by_key.end()) matched = false;
  }
  rep["matching"] = std::move(matching);
  rep["matched"] = matched;
  return rep;
}

namespace {

Json make_suite(const char* name, int trials) {
  Json s;
  s["suite"] = name;
  s["pass"] = true;
  s["trials"] = trials;
  s["failures"] = Json::array();
  return s;
}

void fail(Json& suite, const std::string& message) {
  suite["pass"] = false;
  if (suite["failures"].size() < 25) suite["failures"].push_back(message);
}

std::vector<std::pair<int, int>> finite_cells() {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (is_finite_case(n, k)) out.emplace_back(n, k);
    }
  }
  return out;
}

}  // namespace

Json suite_equivariance(std::uint64_t seed, int trials) {
  Json suite = make_suite("equivariance", trials);
  std::mt19937_64 rng(seed);
  for (const auto& [n, k] : finite_cells()) {
    for (int t = 0; t < trials; ++t) {
      const KVector xi = random_kvector(n, k, rng);
      const GLElement g = random_gl(n, rng);
      const KForm lhs = act(g, hodge_dual(xi));
      const KForm rhs = g.det * hodge_dual(act(gl_inverse(g), xi));
      if (!(lhs == rhs)) {
        fail(suite, "g.c(xi) != det(g) c(g^-1 xi) at (" + std::to_string(n) + "," +
                        std::to_string(k) + ") trial " + std::to_string(t));
      }
    }
  }
  return suite;
}

Json suite_lemma2() {
  Json suite = make_suite("lemma2", 0);
  for (const auto& [n, k] : lemma2_pairs()) {
    const Json rep = lemma2_consistency(n, k);
    if (!rep["matched"].get<bool>()) {
      fail(suite, "pair " + rep["pair"].get<std::string>() + " failed to match");
    }
  }
  return suite;
}

Json suite_certificates() {
  Json suite = make_suite("certificates", 0);
  for (const auto& [n, k] : finite_cells()) {
    const Catalog& cat = builtin_catalog(n, k);
    for (const CatalogEntry& e : cat.entries) {
      if (e.negdet_certificate && !verify_negdet_certificate(*e.negdet_certificate, e.rep)) {
        fail(suite, "certificate of " + e.id + " does not verify");
      }
    }
  }
  const Json audit = validation_report(7, 3)["certificate_audit"];
  if (!audit["ok"].get<bool>()) fail(suite, "(7,3) certificate accounting failed");
  const Catalog& seven_four = builtin_catalog(7, 4);
  int merged = 0;
  int split = 0;
  for (const CatalogEntry& e : seven_four.entries) {
    (e.orientation == 0 ? merged : split) += 1;
  }
  if (merged != 8 || split != 12) {
    fail(suite, "(7,4) merged/split accounting is " + std::to_string(merged) + "+" +
                    std::to_string(split) + ", want 8+12");
  }
  return suite;
}

Json suite_roundtrip(std::uint64_t seed, int trials) {
  Json suite = make_suite("roundtrip", trials);
  for (const auto& [n, k] : finite_cells()) {
    for (const CatalogEntry& e : builtin_catalog(n, k).entries) {
      for (int t = 0; t < trials; ++t) {
        const KForm sampled = sample_orbit(e.id, seed + static_cast<std::uint64_t>(t));
        const Classification c = classify(sampled);
        if (c.orbit_id != e.id) {
          fail(suite, e.id + " sample " + std::to_string(t) + " classified as " +
                          (c.orbit_id.empty() ? "ambiguous" : c.orbit_id));
        }
      }
    }
  }
  return suite;
}

Json selfcheck(std::uint64_t seed, int trials) {
  Json out;
  Json suites = Json::array();
  suites.push_back(suite_certificates());
  suites.push_back(suite_equivariance(seed, trials));
  suites.push_back(suite_lemma2());
  suites.push_back(suite_roundtrip(seed, std::max(1, trials / 10)));
  bool pass = true;
  for (const Json& s : suites) pass = pass && s["pass"].get<bool>();
  out["seed"] = seed;
  out["suites"] = std::move(suites);
  out["pass"] = pass;
  return out;
}

}  // namespace kforms
