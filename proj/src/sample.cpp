#include "kforms/sample.hpp"

#include <numeric>

#include "kforms/action.hpp"

namespace kforms {

namespace {

// Raw modular draws: the tiny bias is irrelevant here and the results do not
// depend on library-specific distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

GLElement random_gl(int n, std::mt19937_64& rng, int det_sign) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int parity = 1;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(draw(rng, static_cast<std::uint64_t>(i) + 1));
    if (j != i) {
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
      parity = -parity;
    }
  }
  QMat m(n, n);
  int det_sgn = parity;
  for (int j = 0; j < n; ++j) {
    const int s = draw(rng, 2) == 0 ? 1 : -1;
    det_sgn *= s;
    m.at(perm[static_cast<std::size_t>(j)], j) = Rat(s);
  }
  if (det_sign != 0 && det_sgn != det_sign) {
    // Negate one monomial entry; shears below keep the determinant.
    for (int i = 0; i < n; ++i) {
      if (!is_zero(m.at(i, 0))) {
        m.at(i, 0) = -m.at(i, 0);
        break;
      }
    }
  }
  const int shears = n < 2 ? 0 : 1 + static_cast<int>(draw(rng, 2));
  static const int kCoeff[4] = {1, -1, 2, -2};
  for (int t = 0; t < shears; ++t) {
    const int i = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n) - 1));
    if (j >= i) ++j;
    const Rat c(kCoeff[draw(rng, 4)]);
    for (int col = 0; col < n; ++col) m.at(i, col) += c * m.at(j, col);
  }
  GLElement g = make_gl(std::move(m));
  if (det_sign != 0 && sgn(g.det) != det_sign) {
    throw std::logic_error("random_gl: determinant sign drifted");
  }
  return g;
}

KVector random_kvector(int n, int k, std::mt19937_64& rng) {
  const std::vector<Blade> blades = blades_of_grade(n, k);
  detail::Terms terms;
  const std::uint64_t picks = 1 + draw(rng, 5);
  for (std::uint64_t t = 0; t < picks; ++t) {
    const Blade b = blades[draw(rng, blades.size())];
    const long c = static_cast<long>(draw(rng, 5)) - 2;
    terms.emplace_back(b, Rat(c));
  }
  return make_alt<Variance::multivector>(n, k, std::move(terms));
}

KForm sample_orbit(const std::string& orbit_id, std::uint64_t seed) {
  const CatalogEntry* entry = find_entry(orbit_id);
  if (entry == nullptr) throw std::invalid_argument("unknown orbit id: " + orbit_id);
  std::mt19937_64 rng(seed ^ fnv1a(orbit_id));
  const GLElement g = random_gl(entry->n, rng, entry->orientation != 0 ? 1 : 0);
  return act(g, entry->rep);
}

}  // namespace kforms
