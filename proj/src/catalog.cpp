#include "kforms/catalog.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "kforms/catalog_data.hpp"
#include "kforms/duality.hpp"
#include "kforms/invariants.hpp"
#include "kforms/parse.hpp"

namespace kforms {

namespace {

void check_cell(int n, int k) {
  if (n < 2 || n > 9 || k < 0 || k > n) {
    throw std::invalid_argument("(n,k) = (" + std::to_string(n) + "," + std::to_string(k) +
                                ") is outside the table (2 <= n <= 9, 0 <= k <= n)");
  }
}

std::string entry_id(int n, int k, int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%d-%d-%02d", n, k, index);
  return buf;
}

/// g(a) = -a on the leading annihilator vector, identity modulo span(a).
/// Then g v - v lies in span(a) for every v, so g fixes any form that a
/// contracts to zero; det(g) = -1.
GLElement reflection_certificate(const KForm& alpha) {
  const Subspace ann = annihilator(alpha);
  if (ann.dim() == 0) throw std::logic_error("reflection certificate needs a degenerate form");
  const QMat& basis = ann.basis();
  int p = -1;
  for (int j = 0; j < basis.cols; ++j) {
    if (!is_zero(basis.at(0, j))) {
      p = j;
      break;
    }
  }
  QMat g = identity_matrix(alpha.n);
  for (int i = 0; i < alpha.n; ++i) {
    g.at(i, p) = (i == p) ? Rat(-1) : Rat(-2) * basis.at(0, i);
  }
  return make_gl(std::move(g));
}

}  // namespace

bool is_infinite_case(int n, int k) {
  check_cell(n, k);
  if (n == 8 && k == 4) return true;
  return n == 9 && k >= 3 && k <= 6;
}

bool is_finite_case(int n, int k) {
  if (n < 2 || n > 9 || k < 0 || k > n) return false;
  return !is_infinite_case(n, k);
}

std::string infinite_row_name(int n, int k) {
  if (n == 8 && k == 4) return "k=4, n=8";
  if (n == 9 && k >= 3 && k <= 6) return "3<=k<=n-3, n>=9";
  throw std::invalid_argument("not an infinite cell");
}

CaseCounts expected_counts(int n, int k) {
  check_cell(n, k);
  CaseCounts c;
  c.n = n;
  c.k = k;
  if (is_infinite_case(n, k)) {
    c.infinite = true;
    return c;
  }
  const auto set = [&c](int total, int nondeg, int stable) {
    c.total = total;
    c.nondegenerate = nondeg;
    c.stable = stable;
  };
  if (k == 0) {
    set(2, 1, 0);
  } else if (k == 1) {
    set(2, 0, 1);
  } else if (k == 2) {
    set(n / 2 + 1, n % 2 == 0 ? 1 : 0, 1);
  } else if (k == n) {
    set(2, 1, 1);
  } else if (k == n - 1) {
    set(2, 0, 1);
  } else if (n == 6 && k == 3) {
    set(6, 3, 2);
  } else if (n == 7 && k == 3) {
    set(14, 8, 2);
  } else if (n == 8 && k == 3) {
    set(35, 21, 3);
  } else if (n == 7 && k == 4) {
    set(20, 15, 4);
  } else if (n == 8 && k == 5) {
    set(35, 31, 3);
  } else if (k == n - 2) {
    if (n % 4 == 2) {
      set(n / 2 + 2, n / 2, 2);
    } else {
      set(n / 2 + 1, n / 2 - 1, 1);
    }
  } else {
    throw std::logic_error("unclassified finite cell");
  }
  return c;
}

namespace detail {

void finalize_entry(CatalogEntry& entry, bool check_stored_flags, bool stored_degenerate,
                    bool stored_stable) {
  const bool degenerate = !is_nondegenerate(entry.rep);
  const bool stable = is_stable(entry.rep);
  if (check_stored_flags && (degenerate != stored_degenerate || stable != stored_stable)) {
    throw std::runtime_error("catalog entry " + entry.id +
                             ": stored flags disagree with recomputation");
  }
  entry.degenerate = degenerate;
  entry.stable = stable;
  if (entry.negdet_certificate &&
      !verify_negdet_certificate(*entry.negdet_certificate, entry.rep)) {
    throw std::runtime_error("catalog entry " + entry.id + ": certificate does not verify");
  }
  if (!entry.negdet_certificate && degenerate && entry.k >= 1) {
    GLElement g = reflection_certificate(entry.rep);
    if (!verify_negdet_certificate(g, entry.rep)) {
      throw std::logic_error("reflection certificate failed for " + entry.id);
    }
    entry.negdet_certificate = std::move(g);
  }
}

}  // namespace detail

namespace {

CatalogEntry raw_entry(int n, int k, KForm rep, std::string provenance, std::string notes) {
  CatalogEntry e;
  e.n = n;
  e.k = k;
  e.rep = std::move(rep);
  e.provenance = std::move(provenance);
  e.notes = std::move(notes);
  return e;
}

void assign_ids_and_finalize(Catalog& catalog) {
  int index = 1;
  for (CatalogEntry& e : catalog.entries) {
    e.id = entry_id(catalog.n, catalog.k, index++);
    detail::finalize_entry(e, false, false, false);
  }
}

Catalog constructed_catalog(int n, int k) {
  Catalog c{n, k, {}};
  const Blade full = (Blade{1} << n) - 1;
  if (k == 0) {
    c.entries.push_back(raw_entry(n, 0, zero_alt<Variance::form>(n, 0), "construction", "zero"));
    c.entries.push_back(
        raw_entry(n, 0, basis_alt<Variance::form>(n, 0), "construction", "unit scalar"));
  } else if (k == 1) {
    c.entries.push_back(raw_entry(n, 1, zero_alt<Variance::form>(n, 1), "construction", "zero"));
    c.entries.push_back(
        raw_entry(n, 1, basis_alt<Variance::form>(n, 1), "construction", "covector e^1"));
  } else if (k == 2) {
    for (int r = 0; 2 * r <= n; ++r) {
      KForm omega = zero_alt<Variance::form>(n, 2);
      for (int i = 1; i <= r; ++i) {
        omega = omega + basis_alt<Variance::form>(n, blade_from_indices({2 * i - 1, 2 * i}));
      }
      c.entries.push_back(raw_entry(n, 2, std::move(omega), "construction",
                                    "rank " + std::to_string(2 * r) + " alternating form"));
    }
  } else if (k == n) {
    c.entries.push_back(raw_entry(n, n, zero_alt<Variance::form>(n, n), "construction", "zero"));
    c.entries.push_back(
        raw_entry(n, n, basis_alt<Variance::form>(n, full), "construction", "volume form"));
  } else if (k == n - 1) {
    c.entries.push_back(
        raw_entry(n, n - 1, zero_alt<Variance::form>(n, n - 1), "construction", "zero"));
    c.entries.push_back(raw_entry(n, n - 1, hodge_dual(basis_alt<Variance::multivector>(n, 1)),
                                  "construction", "c(e_1)"));
  } else {
    throw std::logic_error("no closed-form construction for this cell");
  }
  assign_ids_and_finalize(c);
  return c;
}

std::string g_catalog_dir;

std::map<std::pair<int, int>, Catalog>& cache() {
  static std::map<std::pair<int, int>, Catalog> m;
  return m;
}

std::map<std::string, Fingerprint>& fingerprint_cache() {
  static std::map<std::string, Fingerprint> m;
  return m;
}

Catalog load_data_case(int n, int k) {
  if (!g_catalog_dir.empty()) {
    const std::string path =
        g_catalog_dir + "/catalog_" + std::to_string(n) + "_" + std::to_string(k) + ".json";
    std::ifstream in(path);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      return parse_catalog_json(buf.str(), n, k);
    }
  }
  const char* text = detail::embedded_catalog(n, k);
  if (text == nullptr) throw std::logic_error("no data file for this cell");
  return parse_catalog_json(text, n, k);
}

Catalog build_catalog(int n, int k) {
  if (k <= 2 || k == n || k == n - 1) return constructed_catalog(n, k);
  if ((n == 6 || n == 7 || n == 8) && k == 3) return load_data_case(n, k);
  if (n == 7 && k == 4) return derive_by_duality(builtin_catalog(7, 3));
  if (n == 8 && k == 5) return derive_by_duality(builtin_catalog(8, 3));
  if (k == n - 2) return derive_by_duality(builtin_catalog(n, 2));
  throw std::logic_error("unclassified finite cell");
}

}  // namespace

const Catalog& builtin_catalog(int n, int k) {
  check_cell(n, k);
  if (is_infinite_case(n, k)) throw InfiniteFamilyError(n, k, infinite_row_name(n, k));
  auto& m = cache();
  const auto key = std::make_pair(n, k);
  auto it = m.find(key);
  if (it == m.end()) {
    Catalog built = build_catalog(n, k);
    const CaseCounts expect = expected_counts(n, k);
    if (static_cast<int>(built.entries.size()) != expect.total) {
      throw std::runtime_error("catalog (" + std::to_string(n) + "," + std::to_string(k) +
                               "): " + std::to_string(built.entries.size()) + " entries, expected " +
                               std::to_string(expect.total));
    }
    it = m.emplace(key, std::move(built)).first;
  }
  return it->second;
}

const CatalogEntry* find_entry(const std::string& id) {
  int n = 0, k = 0, index = 0;
  char tail = '\0';
  if (std::sscanf(id.c_str(), "%d-%d-%d%c", &n, &k, &index, &tail) != 3) return nullptr;
  if (!is_finite_case(n, k)) return nullptr;
  const Catalog& c = builtin_catalog(n, k);
  if (index < 1 || index > static_cast<int>(c.entries.size())) return nullptr;
  const CatalogEntry& e = c.entries[static_cast<std::size_t>(index - 1)];
  return e.id == id ? &e : nullptr;
}

const Fingerprint& entry_fingerprint(const CatalogEntry& entry) {
  auto& m = fingerprint_cache();
  auto it = m.find(entry.id);
  if (it == m.end()) it = m.emplace(entry.id, fingerprint(entry.rep)).first;
  return it->second;
}

void set_catalog_directory(const std::string& dir) {
  g_catalog_dir = dir;
  cache().clear();
  fingerprint_cache().clear();
}

Catalog parse_catalog_json(const std::string& text, int n, int k) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::runtime_error("catalog file: expected a JSON array");
  Catalog c{n, k, {}};
  for (const auto& obj : doc) {
    CatalogEntry e;
    e.id = obj.at("id").get<std::string>();
    e.n = obj.at("n").get<int>();
    e.k = obj.at("k").get<int>();
    if (e.n != n || e.k != k) throw std::runtime_error("catalog entry " + e.id + ": wrong cell");
    e.rep = parse_form(obj.at("rep").get<std::string>(), n, k);
    e.provenance = obj.at("provenance").get<std::string>();
    e.notes = obj.value("notes", std::string{});
    if (obj.contains("certificate") && !obj.at("certificate").is_null()) {
      e.negdet_certificate = make_gl(parse_matrix(obj.at("certificate").get<std::string>()));
    }
    e.orientation = obj.value("orientation", 0);
    detail::finalize_entry(e, true, obj.at("degenerate").get<bool>(),
                           obj.at("stable").get<bool>());
    c.entries.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    if (c.entries[i].id != entry_id(n, k, static_cast<int>(i) + 1)) {
      throw std::runtime_error("catalog entry " + c.entries[i].id + ": out-of-sequence id");
    }
  }
  const CaseCounts want = expected_counts(n, k);
  if (!want.infinite && static_cast<int>(c.entries.size()) != want.total) {
    throw std::runtime_error("catalog for (" + std::to_string(n) + "," + std::to_string(k) +
                             ") has " + std::to_string(c.entries.size()) + " entries, expected " +
                             std::to_string(want.total));
  }
  return c;
}

std::string catalog_to_json(const Catalog& catalog) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const CatalogEntry& e : catalog.entries) {
    nlohmann::ordered_json obj;
    obj["id"] = e.id;
    obj["n"] = e.n;
    obj["k"] = e.k;
    obj["rep"] = format_form(e.rep);
    obj["degenerate"] = e.degenerate;
    obj["stable"] = e.stable;
    obj["provenance"] = e.provenance;
    if (e.negdet_certificate) obj["certificate"] = format_matrix(e.negdet_certificate->m);
    if (e.orientation != 0) obj["orientation"] = e.orientation;
    obj["notes"] = e.notes;
    out.push_back(std::move(obj));
  }
  return out.dump(2) + "\n";
}

}  // namespace kforms
