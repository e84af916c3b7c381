// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "kforms/catalog.hpp"
#include "kforms/classify.hpp"
#include "kforms/parse.hpp"
#include "kforms/sample.hpp"
#include "kforms/table.hpp"
#include "kforms/validate.hpp"

using namespace kforms;

namespace {

constexpr std::uint64_t kSeed = 20260823;

int g_failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << num << " (" << name << "): " << (ok ? "PASS" : "FAIL");
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n" << std::flush;
  if (!ok) ++g_failures;
}

template <typename F>
void guarded(int num, const std::string& name, F body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(num, name, false, std::string("exception: ") + e.what());
  }
}

std::vector<std::pair<int, int>> finite_cells() {
  std::vector<std::pair<int, int>> cells;
  for (int n = 2; n <= 9; ++n)
    for (int k = 0; k <= n; ++k)
      if (is_finite_case(n, k)) cells.emplace_back(n, k);
  return cells;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

KForm top_rank_two_form(int n) {
  detail::Terms terms;
  for (int i = 1; 2 * i <= n; ++i)
    terms.emplace_back(blade_from_indices({2 * i - 1, 2 * i}), Rat(1));
  return make_alt<Variance::form>(n, 2, std::move(terms));
}

void criterion_1() {
  const auto table = theorem_table(9);
  const auto mismatches = verify_table(table);
  std::string detail;
  for (const auto& m : mismatches) detail += (detail.empty() ? "" : "; ") + m;
  report(1, "orbit-count table", mismatches.empty(), detail);
}

void criterion_2() {
  const auto s = suite_equivariance(kSeed, 500);
  std::string detail;
  if (!s["failures"].empty()) detail = s["failures"][0].get<std::string>();
  report(2, "duality equivariance", s["pass"].get<bool>(), detail);
}

// Expected red: c cannot preserve stability at the trivial grades. GL acts
// trivially on scalars (the orbit of 1 is a point, never open) but by det on
// volume forms (the orbit of Omega is R \ {0}, open), and is_stable judges
// orbit openness via the tangent rank. The mismatches are therefore exactly
// the nonzero k=0 and k=n entries; every 1 <= k <= n-1 representative must
// still verify, and any mid-grade mismatch is a genuine bug.
void criterion_3() {
  int mid_checked = 0;
  std::vector<std::string> mid_bad;
  std::vector<std::string> edge_bad;
  for (auto [n, k] : finite_cells()) {
    for (const auto& e : builtin_catalog(n, k).entries) {
      const KVector xi = as_multivector(e.rep);
      const bool preserved = is_stable(xi) == is_stable(hodge_dual(xi));
      if (k >= 1 && k <= n - 1) {
        ++mid_checked;
        if (!preserved) mid_bad.push_back(e.id);
      } else if (!preserved) {
        edge_bad.push_back(e.id);
      }
    }
  }
  std::string detail;
  if (!mid_bad.empty()) {
    detail = "mid-grade mismatch at " + mid_bad.front();
  } else {
    detail = "all " + std::to_string(mid_checked) +
             " representatives with 1 <= k <= n-1 preserved; expected exception at the trivial "
             "grades (" +
             std::to_string(edge_bad.size()) +
             " scalar/volume pairs: GL fixes scalars but scales volume forms by det)";
  }
  report(3, "stability preserved by duality", mid_bad.empty() && edge_bad.empty(), detail);
}

void criterion_4() {
  bool ok = true;
  std::string detail;
  for (auto [n, k] : lemma2_pairs(9)) {
    const auto c = lemma2_consistency(n, k);
    if (!c["matched"].get<bool>()) {
      ok = false;
      detail = "mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")";
      break;
    }
  }
  const auto deg_count = [](const Catalog& c) {
    int d = 0;
    for (const auto& e : c.entries) d += e.degenerate ? 1 : 0;
    return d;
  };
  if (ok && deg_count(builtin_catalog(7, 4)) != 20 - 15) {
    ok = false;
    detail = "(7,4) degenerate count != 5";
  }
  if (ok && deg_count(builtin_catalog(7, 4)) != static_cast<int>(builtin_catalog(6, 4).entries.size())) {
    ok = false;
    detail = "(7,4) degenerate count != |orbits(6,4)|";
  }
  if (ok && deg_count(builtin_catalog(8, 5)) != 35 - 31) {
    ok = false;
    detail = "(8,5) degenerate count != 4";
  }
  if (ok && deg_count(builtin_catalog(8, 5)) != static_cast<int>(builtin_catalog(7, 5).entries.size())) {
    ok = false;
    detail = "(8,5) degenerate count != |orbits(7,5)|";
  }
  report(4, "restriction consistency", ok, detail);
}

void criterion_5() {
  bool ok = true;
  std::string detail;
  int merged = 0, split = 0;
  for (const auto& e : builtin_catalog(7, 4).entries) (e.orientation == 0 ? merged : split) += 1;
  if (merged != 8 || split != 12) {
    ok = false;
    detail = "(7,4) merged/split = " + std::to_string(merged) + "/" + std::to_string(split);
  }
  int certified = 0, cert_degenerate = 0, cert_unstable = 0;
  int stable_checked = 0;
  for (const auto& e : builtin_catalog(7, 3).entries) {
    if (e.negdet_certificate) {
      if (!verify_negdet_certificate(*e.negdet_certificate, e.rep)) {
        ok = false;
        detail = "certificate fails at " + e.id;
      }
      ++certified;
      if (e.degenerate) ++cert_degenerate;
      if (!e.degenerate && !e.stable) ++cert_unstable;
      if (e.stable) {
        ok = false;
        detail = "stable entry with certificate: " + e.id;
      }
    } else if (e.stable) {
      const auto& sig = entry_fingerprint(e)["special"]["b_signature"];
      if (sig[0].get<int>() == sig[2].get<int>()) {
        ok = false;
        detail = "stable entry " + e.id + " has p == q";
      } else {
        ++stable_checked;
      }
    }
  }
  if (ok && (certified != 8 || cert_degenerate != 6 || cert_unstable != 2 || stable_checked != 2)) {
    ok = false;
    detail = "(7,3) accounting " + std::to_string(certified) + "=" + std::to_string(cert_degenerate) +
             "+" + std::to_string(cert_unstable) + ", stable " + std::to_string(stable_checked);
  }
  report(5, "orientation accounting", ok, detail);
}

void criterion_6() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 9 && ok; ++n) {
    if (orbit_tangent_rank(parse_form("e1", n)) != n) {
      ok = false;
      detail = "e1 rank wrong at n=" + std::to_string(n);
    }
    if (ok && orbit_tangent_rank(top_rank_two_form(n)) != binomial(n, 2)) {
      ok = false;
      detail = "top 2-form rank wrong at n=" + std::to_string(n);
    }
  }
  if (ok && orbit_tangent_rank(parse_form("e123+e456", 6)) != 20) {
    ok = false;
    detail = "real-type (6,3) not stable";
  }
  if (ok && orbit_tangent_rank(parse_form("e135-e146-e236-e245", 6)) != 20) {
    ok = false;
    detail = "complex-type (6,3) not stable";
  }
  if (ok) {
    int stable73 = 0;
    for (const auto& e : builtin_catalog(7, 3).entries)
      if (e.stable) {
        ++stable73;
        if (orbit_tangent_rank(e.rep) != 35) {
          ok = false;
          detail = "stable (7,3) rank != 35 at " + e.id;
        }
      }
    if (ok && stable73 != 2) {
      ok = false;
      detail = "expected 2 stable (7,3) entries";
    }
  }
  if (ok) {
    for (auto [n, k] : finite_cells()) {
      for (const auto& e : builtin_catalog(n, k).entries) {
        if (e.stable) continue;
        const int rank = n * n - entry_fingerprint(e)["stabilizer_dim"].get<int>();
        if (rank >= binomial(n, k)) {
          ok = false;
          detail = "unstable entry with full tangent rank: " + e.id;
          break;
        }
      }
      if (!ok) break;
    }
  }
  report(6, "stability spot checks", ok, detail);
}

void criterion_7() {
  const auto s = suite_roundtrip(kSeed, 20);
  std::string detail;
  if (!s["failures"].empty()) detail = s["failures"][0].get<std::string>();
  report(7, "classification round-trip", s["pass"].get<bool>(), detail);
}

void criterion_8() {
  bool ok = true;
  std::string detail;
  std::mt19937_64 rng(kSeed);
  for (auto [n, k] : finite_cells()) {
    for (const auto& e : builtin_catalog(n, k).entries) {
      const Fingerprint& base = entry_fingerprint(e);
      for (int t = 0; t < 200 && ok; ++t) {
        const GLElement g = random_gl(n, rng, +1);
        if (fingerprint(act(g, e.rep)) != base) {
          ok = false;
          detail = "fingerprint moved at " + e.id + " trial " + std::to_string(t);
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  if (ok) {
    for (const auto& e : builtin_catalog(7, 3).entries) {
      const auto& sig = entry_fingerprint(e)["special"]["b_signature"];
      const GLElement g = random_gl(7, rng, -1);
      const auto moved = fingerprint(act(g, e.rep))["special"]["b_signature"];
      if (moved[0] != sig[2] || moved[1] != sig[1] || moved[2] != sig[0]) {
        ok = false;
        detail = "det<0 B-signature swap fails at " + e.id;
        break;
      }
    }
  }
  report(8, "fingerprint invariance", ok, detail);
}

void criterion_9() {
  bool ok = true;
  std::string detail;
  // (6,3): the coarse triple already separates the six orbits.
  std::set<std::string> triples;
  for (const auto& e : builtin_catalog(6, 3).entries) {
    const Fingerprint& f = entry_fingerprint(e);
    triples.insert(f["kernel_dim"].dump() + "|" + f["special"].dump() + "|" +
                   f["stabilizer_dim"].dump());
  }
  if (triples.size() != 6) {
    ok = false;
    detail = "(6,3) coarse invariants collide";
  }
  if (ok) {
    for (auto [n, k] : finite_cells()) {
      if (!(k <= 2 || k >= n - 2)) continue;
      std::set<std::string> keys;
      const auto& cat = builtin_catalog(n, k);
      for (const auto& e : cat.entries)
        keys.insert(fingerprint_key(orbit_canonical_fingerprint(entry_fingerprint(e))));
      if (keys.size() != cat.entries.size()) {
        ok = false;
        detail = "fingerprint collision in (" + std::to_string(n) + "," + std::to_string(k) + ")";
        break;
      }
    }
  }
  if (ok) {
    for (auto [n, k] : {std::pair{7, 3}, std::pair{7, 4}, std::pair{8, 3}, std::pair{8, 5}}) {
      const auto rep = validation_report(n, k);
      for (const auto& col : rep["collisions"]) {
        if (!col["explained"].get<bool>()) {
          ok = false;
          detail = "unexplained collision in (" + std::to_string(n) + "," + std::to_string(k) +
                   "): " + col["pair"].dump();
          break;
        }
      }
      if (ok && !validation_ok(rep)) {
        ok = false;
        detail = "validation report not ok for (" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
      if (!ok) break;
    }
  }
  report(9, "orbit separation", ok, detail);
}

}  // namespace

int main() {
  guarded(1, "orbit-count table", criterion_1);
  guarded(2, "duality equivariance", criterion_2);
  guarded(3, "stability preserved by duality", criterion_3);
  guarded(4, "restriction consistency", criterion_4);
  guarded(5, "orientation accounting", criterion_5);
  guarded(6, "stability spot checks", criterion_6);
  guarded(7, "classification round-trip", criterion_7);
  guarded(8, "fingerprint invariance", criterion_8);
  guarded(9, "orbit separation", criterion_9);
  std::cout << (g_failures == 0 ? "acceptance: all criteria pass"
                                : "acceptance: " + std::to_string(g_failures) + " criteria failing")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
