#include "kforms/table.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace kforms {

std::vector<CaseCounts> theorem_table(int n_max) {
  if (n_max < 2 || n_max > 9) throw std::invalid_argument("theorem_table covers 2 <= n <= 9");
  std::vector<CaseCounts> out;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      CaseCounts c;
      c.n = n;
      c.k = k;
      if (is_infinite_case(n, k)) {
        c.infinite = true;
      } else {
        const Catalog& cat = builtin_catalog(n, k);
        c.total = static_cast<int>(cat.entries.size());
        c.nondegenerate = static_cast<int>(std::count_if(
            cat.entries.begin(), cat.entries.end(),
            [](const CatalogEntry& e) { return !e.degenerate; }));
        c.stable = static_cast<int>(std::count_if(cat.entries.begin(), cat.entries.end(),
                                                  [](const CatalogEntry& e) { return e.stable; }));
      }
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> verify_table(const std::vector<CaseCounts>& computed) {
  std::vector<std::string> out;
  for (const CaseCounts& c : computed) {
    const CaseCounts want = expected_counts(c.n, c.k);
    const std::string cell = "(" + std::to_string(c.n) + "," + std::to_string(c.k) + ")";
    if (c.infinite != want.infinite) {
      out.push_back("cell " + cell + ": infinite marker mismatch");
      continue;
    }
    if (c.infinite) continue;
    const auto check = [&](const char* what, int got, int expect) {
      if (got != expect) {
        out.push_back("cell " + cell + ": " + what + " computed " + std::to_string(got) +
                      ", published " + std::to_string(expect));
      }
    };
    check("orbits", c.total, want.total);
    check("nondegenerate", c.nondegenerate, want.nondegenerate);
    check("stable", c.stable, want.stable);
  }
  return out;
}

std::string format_table(const std::vector<CaseCounts>& table) {
  std::ostringstream out;
  out << "  n  k  orbits  non-deg.  stable\n";
  const auto cell = [](int v, bool infinite) {
    return infinite ? std::string("inf") : std::to_string(v);
  };
  for (const CaseCounts& c : table) {
    out << std::setw(3) << c.n << std::setw(3) << c.k << std::setw(8)
        << cell(c.total, c.infinite) << std::setw(10) << cell(c.nondegenerate, c.infinite)
        << std::setw(8) << (c.infinite ? "0" : std::to_string(c.stable)) << "\n";
  }
  return out.str();
}

nlohmann::ordered_json table_json(const std::vector<CaseCounts>& table) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const CaseCounts& c : table) {
    nlohmann::ordered_json cell;
    cell["n"] = c.n;
    cell["k"] = c.k;
    if (c.infinite) {
      cell["orbits"] = "inf";
      cell["nondegenerate"] = "inf";
      cell["stable"] = 0;
    } else {
      cell["orbits"] = c.total;
      cell["nondegenerate"] = c.nondegenerate;
      cell["stable"] = c.stable;
    }
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace kforms
