#include "kforms/fingerprint.hpp"

namespace kforms {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

Fingerprint signature_json(const Signature& s) {
  return Fingerprint::array({s.pos, s.zero, s.neg});
}

// The ordered (7,3) B-signature is a det>0 invariant only; as a full-orbit
// invariant it is the unordered pair. Sorts [p,z,q] so p >= q. The (7,4)
// variant picks up a det^2 twist and needs no adjustment.
void sort_b_signature(Fingerprint& f) {
  if (!f.is_object() || !f.contains("special")) return;
  Fingerprint& special = f["special"];
  if (f.value("n", 0) == 7 && f.value("k", 0) == 3 && special.is_object() &&
      special.contains("b_signature")) {
    Fingerprint& sig = special["b_signature"];
    if (sig[0].get<int>() < sig[2].get<int>()) std::swap(sig[0], sig[2]);
  }
}

}  // namespace

const char* sign_string(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

Fingerprint special_invariant(const KForm& alpha) {
  Fingerprint special;
  if (alpha.n == 6 && alpha.k == 3) {
    special["hitchin_sign"] = sign_string(hitchin_sign(alpha));
  } else if (alpha.n == 7 && alpha.k == 3) {
    special["b_signature"] = signature_json(b_signature(alpha));
  } else if (alpha.n == 7 && alpha.k == 4) {
    special["b_signature"] = signature_json(b_signature(as_form(inverse_hodge_dual(alpha))));
  } else if (alpha.k == 2) {
    special["two_form_rank"] = two_form_rank(alpha);
  } else if (alpha.k >= 3 && alpha.k == alpha.n - 2) {
    const DualTwoVector d = dual_two_vector(alpha);
    Fingerprint v;
    v["rank"] = d.rank;
    // The top sign is a full GL-invariant only for n = 2 mod 4.
    if (d.rank == alpha.n && alpha.n % 4 == 2) v["top_sign"] = sign_string(d.top_sign);
    special["dual_two_vector"] = v;
  } else {
    return nullptr;
  }
  return special;
}

namespace {

Fingerprint fingerprint_impl(const KForm& alpha, bool canonical) {
  Fingerprint f;
  f["n"] = alpha.n;
  f["k"] = alpha.k;
  int kdim = 0;
  QMat ann_rows(0, alpha.n);
  if (alpha.k == 0) {
    kdim = alpha.is_zero() ? alpha.n : 0;
    f["kernel_dim"] = kdim;
    f["support_dim"] = 0;
  } else {
    const KernelResult kr = kernel_exact(interior_matrix(alpha));
    kdim = alpha.n - kr.rank;
    ann_rows = kr.kernel;
    f["kernel_dim"] = kdim;
    f["support_dim"] = kr.rank;
  }
  const int rank = orbit_tangent_rank(alpha);
  f["stabilizer_dim"] = alpha.n * alpha.n - rank;
  f["stable"] = rank == binomial(alpha.n, alpha.k);
  f["special"] = special_invariant(alpha);
  if (canonical) sort_b_signature(f);
  if (alpha.k >= 1 && kdim > 0 && !alpha.is_zero()) {
    // The reduction is well defined only up to the full downstairs orbit, so
    // the nested fingerprint must be the canonical one.
    f["restriction"] = fingerprint_impl(reduce_degenerate(alpha, Subspace(ann_rows, alpha.n)), true);
  } else {
    f["restriction"] = nullptr;
  }
  return f;
}

}  // namespace

Fingerprint fingerprint(const KForm& alpha) { return fingerprint_impl(alpha, false); }

Fingerprint orbit_canonical_fingerprint(const Fingerprint& f) {
  Fingerprint out = f;
  sort_b_signature(out);
  return out;
}

std::string fingerprint_key(const Fingerprint& f) { return f.dump(); }

}  // namespace kforms
