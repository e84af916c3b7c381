#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "kforms/catalog.hpp"
#include "kforms/classify.hpp"
#include "kforms/duality.hpp"
#include "kforms/parse.hpp"
#include "kforms/sample.hpp"
#include "kforms/table.hpp"
#include "kforms/validate.hpp"

using namespace kforms;

TEST_CASE("finite and infinite cells") {
  CHECK(is_finite_case(6, 3));
  CHECK(is_finite_case(8, 5));
  CHECK(is_finite_case(9, 2));
  CHECK(is_finite_case(9, 7));
  CHECK(is_infinite_case(8, 4));
  CHECK(is_infinite_case(9, 3));
  CHECK(is_infinite_case(9, 6));
  CHECK_FALSE(is_infinite_case(7, 4));
  CHECK(infinite_row_name(8, 4) == "k=4, n=8");
  CHECK(infinite_row_name(9, 5) == "3<=k<=n-3, n>=9");
}

TEST_CASE("published count constants") {
  CHECK(expected_counts(6, 3) == CaseCounts{6, 3, false, 6, 3, 2});
  CHECK(expected_counts(7, 3) == CaseCounts{7, 3, false, 14, 8, 2});
  CHECK(expected_counts(8, 3) == CaseCounts{8, 3, false, 35, 21, 3});
  CHECK(expected_counts(7, 4) == CaseCounts{7, 4, false, 20, 15, 4});
  CHECK(expected_counts(8, 5) == CaseCounts{8, 5, false, 35, 31, 3});
  CHECK(expected_counts(6, 2) == CaseCounts{6, 2, false, 4, 1, 1});
  CHECK(expected_counts(5, 2) == CaseCounts{5, 2, false, 3, 0, 1});
  CHECK(expected_counts(9, 1) == CaseCounts{9, 1, false, 2, 0, 1});
  CHECK(expected_counts(4, 0) == CaseCounts{4, 0, false, 2, 1, 0});
  CHECK(expected_counts(5, 5) == CaseCounts{5, 5, false, 2, 1, 1});
  CHECK(expected_counts(6, 5) == CaseCounts{6, 5, false, 2, 0, 1});
  // k = n-2 splits by n mod 4.
  CHECK(expected_counts(6, 4) == CaseCounts{6, 4, false, 5, 3, 2});
  CHECK(expected_counts(8, 6) == CaseCounts{8, 6, false, 5, 3, 1});
  CHECK(expected_counts(7, 5) == CaseCounts{7, 5, false, 4, 2, 1});
  CHECK(expected_counts(9, 7) == CaseCounts{9, 7, false, 5, 3, 1});
  CHECK(expected_counts(8, 4).infinite);
  CHECK(expected_counts(9, 4).infinite);
  CHECK_THROWS_AS((void)expected_counts(10, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)expected_counts(5, 6), std::invalid_argument);
}

TEST_CASE("constructed two-form catalog") {
  const Catalog& c = builtin_catalog(6, 2);
  REQUIRE(c.entries.size() == 4);
  for (int i = 0; i < 4; ++i) {
    const CatalogEntry& e = c.entries[i];
    CHECK(e.id == std::string("6-2-0") + std::to_string(i + 1));
    CHECK(two_form_rank(e.rep) == 2 * i);
    CHECK(e.degenerate == (i < 3));
    CHECK(e.stable == (i == 3));
    CHECK(e.provenance == "construction");
    CHECK(e.orientation == 0);
    if (e.degenerate) CHECK(e.negdet_certificate.has_value());
  }
}

TEST_CASE("constructed edge grades") {
  CHECK(builtin_catalog(5, 0).entries.size() == 2);
  CHECK(builtin_catalog(5, 1).entries.size() == 2);
  CHECK(builtin_catalog(5, 5).entries.size() == 2);
  CHECK(builtin_catalog(5, 4).entries.size() == 2);
  const Catalog& top = builtin_catalog(5, 5);
  CHECK(top.entries[0].rep.is_zero());
  CHECK(top.entries[1].rep == parse_form("e12345", 5));
  CHECK(top.entries[1].stable);
  CHECK_FALSE(top.entries[1].degenerate);
  const Catalog& almost = builtin_catalog(5, 4);
  CHECK(kernel_dim(almost.entries[1].rep) == 1);
  CHECK(almost.entries[1].stable);
}

TEST_CASE("derived k = n-2 catalogs") {
  const Catalog& c75 = builtin_catalog(7, 5);
  CHECK(c75.entries.size() == 4);
  for (const auto& e : c75.entries) CHECK(e.orientation == 0);

  const Catalog& c64 = builtin_catalog(6, 4);
  REQUIRE(c64.entries.size() == 5);
  CHECK(c64.entries[3].orientation == 1);
  CHECK(c64.entries[4].orientation == -1);
  CHECK(c64.entries[3].stable);
  CHECK(c64.entries[4].stable);
  CHECK(c64.entries[3].rep == -c64.entries[4].rep);
  const Fingerprint& fp = entry_fingerprint(c64.entries[3]);
  const Fingerprint& fm = entry_fingerprint(c64.entries[4]);
  CHECK(fp["special"]["dual_two_vector"]["top_sign"] != fm["special"]["dual_two_vector"]["top_sign"]);

  const Catalog& c86 = builtin_catalog(8, 6);
  CHECK(c86.entries.size() == 5);
  for (const auto& e : c86.entries) CHECK(e.orientation == 0);
}

TEST_CASE("entry flags are recomputed and certificates verified") {
  for (auto [n, k] : {std::pair{6, 2}, std::pair{6, 4}, std::pair{7, 5}}) {
    for (const auto& e : builtin_catalog(n, k).entries) {
      CHECK(e.degenerate == !is_nondegenerate(e.rep));
      CHECK(e.stable == is_stable(e.rep));
      if (e.negdet_certificate)
        CHECK(verify_negdet_certificate(*e.negdet_certificate, e.rep));
      if (e.degenerate && e.k >= 1) CHECK(e.negdet_certificate.has_value());
    }
  }
}

TEST_CASE("catalog lookup") {
  const CatalogEntry* e = find_entry("6-2-01");
  REQUIRE(e != nullptr);
  CHECK(e->rep.is_zero());
  CHECK(find_entry("6-2-05") == nullptr);
  CHECK(find_entry("8-4-01") == nullptr);
  CHECK(find_entry("10-2-01") == nullptr);
  CHECK(find_entry("junk") == nullptr);
  CHECK(find_entry("") == nullptr);
}

TEST_CASE("infinite family errors") {
  CHECK_THROWS_AS((void)builtin_catalog(8, 4), InfiniteFamilyError);
  try {
    (void)builtin_catalog(9, 5);
    CHECK(false);
  } catch (const InfiniteFamilyError& e) {
    CHECK(e.n() == 9);
    CHECK(e.k() == 5);
    CHECK(e.row() == "3<=k<=n-3, n>=9");
  }
}

TEST_CASE("catalog json round trip") {
  const Catalog& c = builtin_catalog(6, 4);
  const std::string text = catalog_to_json(c);
  const Catalog back = parse_catalog_json(text, 6, 4);
  REQUIRE(back.entries.size() == c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    CHECK(back.entries[i].id == c.entries[i].id);
    CHECK(back.entries[i].rep == c.entries[i].rep);
    CHECK(back.entries[i].degenerate == c.entries[i].degenerate);
    CHECK(back.entries[i].stable == c.entries[i].stable);
    CHECK(back.entries[i].orientation == c.entries[i].orientation);
    CHECK(back.entries[i].negdet_certificate.has_value() ==
          c.entries[i].negdet_certificate.has_value());
  }
  CHECK_THROWS_AS((void)parse_catalog_json("[]", 6, 4), std::runtime_error);
  CHECK_THROWS_AS((void)parse_catalog_json("{", 6, 4), std::exception);
}

TEST_CASE("classify exact branches") {
  const Classification rank4 = classify(parse_form("e12+e34", 5));
  CHECK(rank4.orbit_id == "5-2-03");
  CHECK(rank4.certainty == "exact");
  CHECK(classify(zero_alt<Variance::form>(5, 2)).orbit_id == "5-2-01");
  CHECK(classify(parse_form("e1", 6)).orbit_id == "6-1-02");
  CHECK(classify(zero_alt<Variance::form>(4, 0)).orbit_id == "4-0-01");
  CHECK(classify(parse_form("5", 4, 0)).orbit_id == "4-0-02");
  CHECK(classify(parse_form("e1234", 4)).orbit_id == "4-4-02");
  CHECK(classify(parse_form("e123", 4)).orbit_id == "4-3-02");
  CHECK(classify(parse_form("e123", 4)).certainty == "exact");
}

TEST_CASE("classify derived cells by fingerprint") {
  const Classification z = classify(zero_alt<Variance::form>(5, 3));
  CHECK(z.orbit_id == "5-3-01");
  CHECK(z.certainty == "fingerprint-unique");
  // Orientation pair on (6,4): both directions classify to their own entry.
  const Catalog& c64 = builtin_catalog(6, 4);
  const Classification plus = classify(c64.entries[3].rep);
  const Classification minus = classify(c64.entries[4].rep);
  CHECK(plus.orbit_id == "6-4-04");
  CHECK(minus.orbit_id == "6-4-05");
}

TEST_CASE("classify rejects infinite and out-of-range cells") {
  CHECK_THROWS_AS((void)classify(parse_form("e1234", 8)), InfiniteFamilyError);
  CHECK_THROWS_AS((void)classify(parse_form("e1234", 9)), InfiniteFamilyError);
  CHECK_THROWS_AS((void)classify(parse_form("e1", 10)), std::invalid_argument);
}

TEST_CASE("sampling is deterministic and classifiable") {
  const KForm a = sample_orbit("6-2-03", 5);
  const KForm b = sample_orbit("6-2-03", 5);
  CHECK(a == b);
  CHECK(a != sample_orbit("6-2-03", 6));
  CHECK_THROWS_AS((void)sample_orbit("6-2-99", 1), std::invalid_argument);
  CHECK_THROWS_AS((void)sample_orbit("8-4-01", 1), std::invalid_argument);
  for (const auto& e : builtin_catalog(6, 2).entries)
    for (std::uint64_t seed = 0; seed < 4; ++seed)
      CHECK(classify(sample_orbit(e.id, seed)).orbit_id == e.id);
  for (const auto& e : builtin_catalog(6, 4).entries)
    for (std::uint64_t seed = 0; seed < 3; ++seed)
      CHECK(classify(sample_orbit(e.id, seed)).orbit_id == e.id);
}

TEST_CASE("table verifies on the constructed range") {
  const auto t5 = theorem_table(5);
  CHECK(verify_table(t5).empty());
  const std::string text = format_table(t5);
  CHECK(text.find("inf") == std::string::npos);
  CHECK(text.find(" 5  2") != std::string::npos);
  const auto j = table_json(t5);
  CHECK(j.is_array());
  // 1 <= k <= n for 2 <= n <= 5.
  CHECK(j.size() == 2 + 3 + 4 + 5);
}

TEST_CASE("validation report on a constructed cell") {
  const auto report = validation_report(6, 2);
  CHECK(validation_ok(report));
  CHECK(report["counts"]["match"] == true);
  CHECK(report["collisions"].empty());
  const auto& sep = report["separation_matrix"];
  REQUIRE(sep.size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(sep[i][j] == 1);
}

TEST_CASE("lemma 2 pairs and consistency on derived cells") {
  CHECK(lemma2_applicable(6, 2));
  CHECK(lemma2_applicable(7, 4));
  CHECK_FALSE(lemma2_applicable(9, 4));
  CHECK(lemma2_applicable(8, 5));
  CHECK_FALSE(lemma2_applicable(8, 4));  // the upper cell is infinite
  const auto pairs = lemma2_pairs(9);
  CHECK(pairs.size() == 30);
  for (auto [n, k] : {std::pair{5, 2}, std::pair{6, 4}, std::pair{6, 5}}) {
    const auto c = lemma2_consistency(n, k);
    CHECK(c["matched"] == true);
  }
}

TEST_CASE("equivariance suite runs clean") {
  const auto s = suite_equivariance(2026, 3);
  CHECK(s["pass"] == true);
  CHECK(s["failures"].empty());
}
