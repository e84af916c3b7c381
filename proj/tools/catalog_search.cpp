// Offline discovery helper used to author the curated data files: buckets
// candidate forms by orbit invariants, proposes representative lists, and
// searches for negative-determinant stabilizer certificates. Not part of the
// shipped CLI surface.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kforms/action.hpp"
#include "kforms/catalog.hpp"
#include "kforms/classify.hpp"
#include "kforms/invariants.hpp"
#include "kforms/parse.hpp"
#include "kforms/sample.hpp"

namespace {

using namespace kforms;
using Json = nlohmann::ordered_json;

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// ---------------------------------------------------------------------------
// Orbit keys: canonical fingerprint plus the extra discriminator, so buckets
// are full orbits even where fingerprints collide.

std::vector<int> extra_discriminator(const KForm& alpha) {
  const Signature s = signature(trace_gram(stabilizer_basis(alpha)));
  return {s.pos, s.zero, s.neg};
}

std::string orbit_key(const KForm& alpha) {
  std::string key = fingerprint_key(orbit_canonical_fingerprint(fingerprint(alpha)));
  key += " |";
  for (int v : extra_discriminator(alpha)) key += " " + std::to_string(v);
  return key;
}

// Smaller is nicer: term count, coefficient magnitude, formatted length.
long long rep_score(const KForm& alpha) {
  long long score = static_cast<long long>(alpha.terms.size()) * 1000000;
  for (const auto& [b, c] : alpha.terms) {
    (void)b;
    score += 100 * (mpz_class(abs(c.get_num())).get_si() + c.get_den().get_si() - 1);
  }
  score += static_cast<long long>(format_form(alpha).size());
  return score;
}

struct Bucket {
  KForm rep;
  long long score = 0;
  long long hits = 0;
  bool from_seed = false;
};

struct Discovery {
  std::map<std::string, Bucket> buckets;

  void offer(const KForm& alpha, bool seed_candidate) {
    const std::string key = orbit_key(alpha);
    auto it = buckets.find(key);
    if (it == buckets.end()) {
      buckets.emplace(key, Bucket{alpha, rep_score(alpha), 1, seed_candidate});
      return;
    }
    ++it->second.hits;
    const long long score = rep_score(alpha);
    const bool better = seed_candidate == it->second.from_seed ? score < it->second.score
                                                              : seed_candidate;
    if (better) {
      it->second.rep = alpha;
      it->second.score = score;
      it->second.from_seed = seed_candidate;
    }
  }
};

// ---------------------------------------------------------------------------
// Candidate generators.

std::vector<std::string> curated_seeds(int n, int k) {
  if (k != 3) return {};
  std::vector<std::string> s;
  if (n >= 3) s.push_back("e123");
  if (n >= 5) {
    s.push_back("e123+e145");
    s.push_back("e125+e345");
  }
  if (n >= 6) {
    s.push_back("e123+e456");
    s.push_back("e135-e146-e236-e245");
    s.push_back("e123+e145+e246");
    s.push_back("e123+e145+e246+e356");
    s.push_back("e126+e135+e234");
  }
  if (n >= 7) {
    s.push_back("e123+e145+e167");
    s.push_back("e123+e145+e167+e246-e257-e347-e356");
    s.push_back("e123+e145+e167+e246+e257+e347-e356");
    s.push_back("e123+e456+e147");
    s.push_back("e123+e456+e147+e257");
    s.push_back("e123+e456+e147+e257+e367");
    s.push_back("e123+e145+e246+e357");
    s.push_back("e147+e257+e367+e123");
    s.push_back("e123+e467+e567");
  }
  if (n >= 8) {
    s.push_back("e123+e456+e178+e278");
    s.push_back("e123+e456+e147+e268");
    s.push_back("e123+e456+e781+e782");
    s.push_back("e128+e138+e123+e456");
  }
  return s;
}

// Structure-constant 3-forms tr(x[y,z]) of the three real forms of sl(3,C),
// over explicit rational bases of 3x3 matrices (entries a + b i as pairs).
struct CMat {
  // 3x3 complex rational matrix, entry (r,c) = (re, im).
  Rat re[3][3];
  Rat im[3][3];
};

CMat cmul(const CMat& x, const CMat& y) {
  CMat out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      Rat re(0), im(0);
      for (int t = 0; t < 3; ++t) {
        re += x.re[r][t] * y.re[t][c] - x.im[r][t] * y.im[t][c];
        im += x.re[r][t] * y.im[t][c] + x.im[r][t] * y.re[t][c];
      }
      out.re[r][c] = re;
      out.im[r][c] = im;
    }
  }
  return out;
}

CMat csub(const CMat& x, const CMat& y) {
  CMat out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out.re[r][c] = x.re[r][c] - y.re[r][c];
      out.im[r][c] = x.im[r][c] - y.im[r][c];
    }
  }
  return out;
}

std::pair<Rat, Rat> ctrace(const CMat& x) {
  Rat re(0), im(0);
  for (int r = 0; r < 3; ++r) {
    re += x.re[r][r];
    im += x.im[r][r];
  }
  return {re, im};
}

CMat unit(int r, int c, bool imaginary, int sign) {
  CMat out{};
  if (imaginary) {
    out.im[r][c] = Rat(sign);
  } else {
    out.re[r][c] = Rat(sign);
  }
  return out;
}

CMat add(const CMat& x, const CMat& y) {
  CMat out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out.re[r][c] = x.re[r][c] + y.re[r][c];
      out.im[r][c] = x.im[r][c] + y.im[r][c];
    }
  }
  return out;
}

std::vector<CMat> real_form_basis(const std::string& which) {
  std::vector<CMat> b;
  if (which == "sl3r") {
    b.push_back(add(unit(0, 0, false, 1), unit(1, 1, false, -1)));
    b.push_back(add(unit(1, 1, false, 1), unit(2, 2, false, -1)));
    b.push_back(unit(0, 1, false, 1));
    b.push_back(unit(0, 2, false, 1));
    b.push_back(unit(1, 2, false, 1));
    b.push_back(unit(1, 0, false, 1));
    b.push_back(unit(2, 0, false, 1));
    b.push_back(unit(2, 1, false, 1));
    return b;
  }
  // su(3): anti-Hermitian w.r.t. diag(1,1,1); su(2,1): w.r.t. diag(1,1,-1).
  // Basis: i(E_jj - E_(j+1)(j+1)); E_jk - s_jk E_kj; i(E_jk + s_jk E_kj),
  // where s_jk = J_jj J_kk is the metric sign (+1 except when exactly one of
  // j,k is the last coordinate).
  const int metric2 = which == "su3" ? 1 : -1;
  const auto s_of = [&](int j, int kk) { return (j == 2) == (kk == 2) ? 1 : metric2; };
  b.push_back(add(unit(0, 0, true, 1), unit(1, 1, true, -1)));
  b.push_back(add(unit(1, 1, true, 1), unit(2, 2, true, -1)));
  for (int j = 0; j < 3; ++j) {
    for (int kk = j + 1; kk < 3; ++kk) {
      b.push_back(add(unit(j, kk, false, 1), unit(kk, j, false, -s_of(j, kk))));
      b.push_back(add(unit(j, kk, true, 1), unit(kk, j, true, s_of(j, kk))));
    }
  }
  return b;
}

KForm lie_form(const std::string& which) {
  const std::vector<CMat> basis = real_form_basis(which);
  detail::Terms terms;
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (int c = b + 1; c < 8; ++c) {
        const CMat br = csub(cmul(basis[static_cast<std::size_t>(b)],
                                  basis[static_cast<std::size_t>(c)]),
                             cmul(basis[static_cast<std::size_t>(c)],
                                  basis[static_cast<std::size_t>(b)]));
        const auto [re, im] = ctrace(cmul(basis[static_cast<std::size_t>(a)], br));
        // tr(X[Y,Z]) is real on every real form: the basis matrices are
        // anti-Hermitian (or real), so tr(AB) equals its own conjugate.
        if (!is_zero(im)) throw std::logic_error("trace form not real");
        const Rat coeff = re;
        if (!is_zero(coeff)) {
          const Blade blade = (Blade{1} << a) | (Blade{1} << b) | (Blade{1} << c);
          terms.emplace_back(blade, coeff);
        }
      }
    }
  }
  return make_alt<Variance::form>(8, 3, std::move(terms));
}

KForm random_form(int n, int k, std::mt19937_64& rng) {
  return as_form(random_kvector(n, k, rng));
}

// All sums of term subsets, for finding degenerations of a discovered rep.
void offer_subsets(Discovery& d, const KForm& alpha, std::size_t cap) {
  const std::size_t t = alpha.terms.size();
  if (t == 0 || t > 10) return;
  const std::size_t limit = std::min<std::size_t>(std::size_t{1} << t, cap);
  for (std::size_t mask = 1; mask < limit; ++mask) {
    detail::Terms sub;
    for (std::size_t i = 0; i < t; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(alpha.terms[i]);
    }
    d.offer(make_alt<Variance::form>(alpha.n, alpha.k, std::move(sub)), false);
  }
}

int run_classes(int n, int k, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const CaseCounts want = expected_counts(n, k);
  Discovery d;
  d.offer(zero_alt<Variance::form>(n, k), true);
  for (const std::string& s : curated_seeds(n, k)) {
    KForm f = parse_form(s, n, k);
    d.offer(f, true);
    offer_subsets(d, f, 1024);
  }
  if (n == 8 && k == 3) {
    for (const char* which : {"sl3r", "su3", "su21"}) {
      const KForm f = lie_form(which);
      std::cerr << which << ": " << format_form(f) << "\n";
      d.offer(f, true);
    }
  }
  // Lower-dimensional structure: embeddings of the (n-1,k) classes and
  // e_n ^ omega + beta combinations, discovered recursively.
  if (n > k && is_finite_case(n - 1, k)) {
    // Use the catalog when it loads (it may not while data files are still
    // being authored); otherwise rediscover the lower classes on the fly.
    std::vector<KForm> lower;
    try {
      for (const CatalogEntry& e : builtin_catalog(n - 1, k).entries) lower.push_back(e.rep);
    } catch (const std::exception&) {
      Discovery ld;
      ld.offer(zero_alt<Variance::form>(n - 1, k), true);
      for (const std::string& s : curated_seeds(n - 1, k)) {
        KForm f = parse_form(s, n - 1, k);
        ld.offer(f, true);
        offer_subsets(ld, f, 1024);
      }
      for (int t = 0; t < samples; ++t) ld.offer(random_form(n - 1, k, rng), false);
      for (const auto& [key, bucket] : ld.buckets) lower.push_back(bucket.rep);
    }
    const KForm en = basis_alt<Variance::form>(n, Blade{1} << (n - 1));
    for (const KForm& beta : lower) {
      const KForm embedded = embed_form(beta, n);
      d.offer(embedded, false);
      offer_subsets(d, embedded, 256);
      for (int r = 0; 2 * r <= n - 1 && k == 3; ++r) {
        KForm omega = zero_alt<Variance::form>(n, 2);
        for (int i = 1; i <= r; ++i) {
          omega = omega + basis_alt<Variance::form>(n, blade_from_indices({2 * i - 1, 2 * i}));
        }
        const KForm cand = wedge(en, omega) + embedded;
        d.offer(cand, false);
        offer_subsets(d, cand, 256);
      }
    }
  }
  for (int t = 0; t < samples; ++t) {
    const KForm f = random_form(n, k, rng);
    d.offer(f, false);
    if (t % 8 == 0) offer_subsets(d, f, 128);
  }

  // Local moves: sporadic orbits of high codimension rarely show up in random
  // samples, but they neighbor the found ones.  Perturb every representative
  // by single basis blades until the class list stops growing.
  for (std::size_t before = 0; before != d.buckets.size();) {
    before = d.buckets.size();
    std::vector<KForm> reps;
    reps.reserve(d.buckets.size());
    for (const auto& [key, bucket] : d.buckets) reps.push_back(bucket.rep);
    for (const KForm& rep : reps) {
      for (Blade b : blades_of_grade(n, k)) {
        const KForm unit = basis_alt<Variance::form>(n, b);
        d.offer(rep + unit, false);
        d.offer(rep - unit, false);
      }
    }
  }

  std::vector<std::pair<std::string, Bucket>> rows(d.buckets.begin(), d.buckets.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const Fingerprint fa = fingerprint(a.second.rep);
    const Fingerprint fb = fingerprint(b.second.rep);
    const int ka = fa["kernel_dim"].template get<int>();
    const int kb = fb["kernel_dim"].template get<int>();
    if (ka != kb) return ka > kb;
    const int sa = fa["stabilizer_dim"].template get<int>();
    const int sb = fb["stabilizer_dim"].template get<int>();
    if (sa != sb) return sa > sb;
    return format_form(a.second.rep) < format_form(b.second.rep);
  });
  std::cout << "expected " << want.total << " classes, found " << rows.size() << "\n\n";
  Json entries = Json::array();
  int index = 1;
  for (const auto& [key, bucket] : rows) {
    const KForm& rep = bucket.rep;
    const bool deg = !is_nondegenerate(rep);
    const bool stab = is_stable(rep);
    std::cout << "[" << index << "] " << format_form(rep) << "\n    hits " << bucket.hits
              << (bucket.from_seed ? " (seed)" : "") << (deg ? " degenerate" : "")
              << (stab ? " stable" : "") << "\n    " << key << "\n";
    char idbuf[32];
    std::snprintf(idbuf, sizeof idbuf, "%d-%d-%02d", n, k, index);
    Json e;
    e["id"] = idbuf;
    e["n"] = n;
    e["k"] = k;
    e["rep"] = format_form(rep);
    e["degenerate"] = deg;
    e["stable"] = stab;
    e["provenance"] = "literature";
    e["notes"] = "";
    entries.push_back(std::move(e));
    ++index;
  }
  std::cout << "\n" << entries.dump(2) << "\n";
  return rows.size() == static_cast<std::size_t>(want.total) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Signed-permutation certificate search.

struct SignedPerm {
  std::vector<int> perm;  // 0-based images
  std::uint32_t flips = 0;

  [[nodiscard]] int det_sign(int n) const {
    int s = std::popcount(flips) % 2 == 0 ? 1 : -1;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0;
      for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }
};

// act(g, alpha) for the monomial matrix g: e_j -> sign_j e_{perm(j)} equals
// relabeling each blade through perm^{-1}... work with the transpose
// convention directly: the form coefficient at blade B picks up the
// coefficient of alpha at perm(B) with the sort sign and the product of
// flips over B.
bool fixes_form(const SignedPerm& g, const KForm& alpha) {
  // Coefficient of g.alpha at P is prod_{j in P} s_j times the sort sign of
  // the image tuple times alpha at perm(P); iterating over alpha's own terms
  // builds g.alpha exactly because the blade map is a bijection.
  std::vector<int> inv(g.perm.size());
  for (std::size_t j = 0; j < g.perm.size(); ++j) inv[static_cast<std::size_t>(g.perm[j])] = static_cast<int>(j);
  detail::Terms pulled;
  for (const auto& [b, c] : alpha.terms) {
    Blade src = 0;
    int sign = 1;
    std::vector<int> images;
    for (Blade rest = b; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const int j = inv[static_cast<std::size_t>(i)];
      src |= Blade{1} << j;
      images.push_back(j);
      if (g.flips & (Blade{1} << j)) sign = -sign;
    }
    // Sort parity of the image tuple: images as produced follow ascending i;
    // count inversions of the j sequence.
    for (std::size_t x = 0; x < images.size(); ++x) {
      for (std::size_t y = x + 1; y < images.size(); ++y) {
        if (images[x] > images[y]) sign = -sign;
      }
    }
    pulled.emplace_back(src, sign < 0 ? -c : c);
  }
  return detail::normalize_terms(std::move(pulled)) == alpha.terms;
}

QMat signed_perm_matrix(const SignedPerm& g, int n) {
  QMat m(n, n);
  for (int j = 0; j < n; ++j) {
    m.at(g.perm[static_cast<std::size_t>(j)], j) =
        (g.flips & (Blade{1} << j)) ? Rat(-1) : Rat(1);
  }
  return m;
}

std::optional<GLElement> search_signed_perm_certificate(const KForm& alpha) {
  const int n = alpha.n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
      SignedPerm g{perm, flips};
      if (g.det_sign(n) >= 0) continue;
      if (fixes_form(g, alpha)) {
        GLElement out = make_gl(signed_perm_matrix(g, n));
        if (verify_negdet_certificate(out, alpha)) return out;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

int run_certs(int n, int k, std::uint64_t seed, int conjugates) {
  std::mt19937_64 rng(seed);
  const Catalog& cat = builtin_catalog(n, k);
  for (const CatalogEntry& e : cat.entries) {
    if (e.degenerate) {
      std::cout << e.id << ": degenerate (certificate constructed by reflection)\n";
      continue;
    }
    std::optional<GLElement> cert = search_signed_perm_certificate(e.rep);
    for (int t = 0; !cert && t < conjugates; ++t) {
      const GLElement h = random_gl(n, rng);
      const KForm moved = act(h, e.rep);
      const std::optional<GLElement> inner = search_signed_perm_certificate(moved);
      if (inner) {
        const GLElement candidate = h * *inner * gl_inverse(h);
        if (verify_negdet_certificate(candidate, e.rep)) cert = candidate;
      }
    }
    if (cert) {
      std::cout << e.id << ": certificate " << format_matrix(cert->m) << "\n";
    } else {
      std::cout << e.id << ": none found"
                << (e.stable ? " (stable; expected none)" : "") << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catalog discovery helper"};
  app.require_subcommand(1);
  int n = 0;
  int k = 3;
  int samples = 4000;
  int conjugates = 40;
  std::uint64_t seed = 20260823;
  std::string catalog_dir;
  app.add_option("--catalog", catalog_dir, "catalog directory override");
  app.add_option("--seed", seed, "RNG seed");

  CLI::App* classes = app.add_subcommand("classes", "discover orbit classes");
  classes->add_option("n", n)->required();
  classes->add_option("k", k)->required();
  classes->add_option("--samples", samples);
  CLI::App* certs = app.add_subcommand("certs", "search negdet certificates");
  certs->add_option("n", n)->required();
  certs->add_option("k", k)->required();
  certs->add_option("--conjugates", conjugates);
  CLI::App* lie = app.add_subcommand("lie", "print the three sl(3,C) real-form trace forms");

  CLI11_PARSE(app, argc, argv);
  if (!catalog_dir.empty()) set_catalog_directory(catalog_dir);
  try {
    if (classes->parsed()) return run_classes(n, k, samples, seed);
    if (certs->parsed()) return run_certs(n, k, seed, conjugates);
    if (lie->parsed()) {
      for (const char* which : {"sl3r", "su3", "su21"}) {
        const KForm f = lie_form(which);
        std::cout << which << ": " << format_form(f) << "\n";
        std::cout << "  " << orbit_key(f) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
