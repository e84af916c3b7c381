#include "kforms/rank.hpp"

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>

namespace kforms {

IntMat int_matrix_rows_cleared(const QMat& m) {
  IntMat out(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r) {
    mpz_class lcm_den(1);
    for (int c = 0; c < m.cols; ++c) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    }
    for (int c = 0; c < m.cols; ++c) {
      const Rat& v = m.at(r, c);
      out.at(r, c) = v.get_num() * (lcm_den / v.get_den());
    }
  }
  return out;
}

namespace {

// ---- escalating Bareiss ----------------------------------------------------

template <typename T>
struct BareissState {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;
  int row = 0;  // rank found so far
  int col = 0;
  T prev = 1;

  [[nodiscard]] T& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
};

template <typename T>
[[nodiscard]] T abs_of(T v) {
  return v < 0 ? -v : v;
}

/// Runs Bareiss steps until done or an entry magnitude passes `limit`
/// (limit 0 = unlimited). Returns true when elimination completed.
template <typename T>
bool bareiss_run(BareissState<T>& s, const T& limit) {
  while (s.row < s.rows && s.col < s.cols) {
    int pivot = -1;
    for (int r = s.row; r < s.rows; ++r) {
      if (s.at(r, s.col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      ++s.col;
      continue;
    }
    if (limit != 0) {
      T mx = 0;
      for (int r = s.row; r < s.rows; ++r)
        for (int c = s.col; c < s.cols; ++c) {
          T v = abs_of(s.at(r, c));
          if (v > mx) mx = v;
        }
      if (mx > limit) return false;
    }
    if (pivot != s.row) {
      for (int c = s.col; c < s.cols; ++c) std::swap(s.at(pivot, c), s.at(s.row, c));
    }
    const T p = s.at(s.row, s.col);
    for (int r = s.row + 1; r < s.rows; ++r) {
      const T f = s.at(r, s.col);
      if constexpr (std::is_same_v<T, mpz_class>) {
        mpz_class t;
        for (int c = s.col + 1; c < s.cols; ++c) {
          mpz_mul(t.get_mpz_t(), p.get_mpz_t(), s.at(r, c).get_mpz_t());
          mpz_submul(t.get_mpz_t(), f.get_mpz_t(), s.at(s.row, c).get_mpz_t());
          mpz_divexact(s.at(r, c).get_mpz_t(), t.get_mpz_t(), s.prev.get_mpz_t());
        }
      } else {
        for (int c = s.col + 1; c < s.cols; ++c) {
          s.at(r, c) = (p * s.at(r, c) - f * s.at(s.row, c)) / s.prev;
        }
      }
      s.at(r, s.col) = 0;
    }
    s.prev = p;
    ++s.row;
    ++s.col;
  }
  return true;
}

template <typename From, typename To, typename Conv>
BareissState<To> escalate(const BareissState<From>& s, Conv conv) {
  BareissState<To> out;
  out.rows = s.rows;
  out.cols = s.cols;
  out.row = s.row;
  out.col = s.col;
  out.prev = conv(s.prev);
  out.a.reserve(s.a.size());
  for (const auto& v : s.a) out.a.push_back(conv(v));
  return out;
}

mpz_class int128_to_mpz(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, 8, 0, 0, &u);
  return neg ? mpz_class(-out) : out;
}

// ---- modular kernel path ---------------------------------------------------

constexpr std::uint64_t kP1 = (std::uint64_t{1} << 61) - 1;   // Mersenne prime
constexpr std::uint64_t kP2 = 4611686018427387847ull;         // 2^62 - 57, prime

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t out = 1;
  while (exp) {
    if (exp & 1) out = mulmod(out, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return out;
}

struct ModRref {
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<int> free_cols;
  std::vector<std::uint64_t> m;  // row-major reduced matrix (rank rows significant)
  int cols = 0;
};

ModRref mod_rref(const IntMat& in, std::uint64_t p) {
  ModRref out;
  out.cols = in.cols;
  out.m.assign(static_cast<std::size_t>(in.rows) * in.cols, 0);
  for (int r = 0; r < in.rows; ++r)
    for (int c = 0; c < in.cols; ++c) {
      out.m[static_cast<std::size_t>(r) * in.cols + c] = mpz_fdiv_ui(in.at(r, c).get_mpz_t(), p);
    }
  auto at = [&](int r, int c) -> std::uint64_t& {
    return out.m[static_cast<std::size_t>(r) * in.cols + c];
  };
  int row = 0;
  int col = 0;
  for (; col < in.cols && row < in.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < in.rows; ++r) {
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      out.free_cols.push_back(col);
      continue;
    }
    if (pivot != row) {
      for (int c = col; c < in.cols; ++c) std::swap(at(pivot, c), at(row, c));
    }
    const std::uint64_t inv = powmod(at(row, col), p - 2, p);
    for (int c = col; c < in.cols; ++c) at(row, c) = mulmod(at(row, c), inv, p);
    for (int r = 0; r < in.rows; ++r) {
      if (r == row) continue;
      const std::uint64_t f = at(r, col);
      if (f == 0) continue;
      for (int c = col; c < in.cols; ++c) {
        std::uint64_t sub = mulmod(f, at(row, c), p);
        std::uint64_t& v = at(r, c);
        v = (v >= sub) ? v - sub : v + p - sub;
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  // Columns never examined (the row supply ran out first) are all free.
  for (; col < in.cols; ++col) out.free_cols.push_back(col);
  out.rank = row;
  return out;
}

/// Rational reconstruction of v mod modulus with |num|, den <= bound.
std::optional<Rat> rat_reconstruct(const mpz_class& v, const mpz_class& modulus,
                                   const mpz_class& bound) {
  if (sgn(v) == 0) return Rat(0);
  mpz_class r0 = modulus, r1 = v, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (sgn(t1) == 0) return std::nullopt;
  mpz_class den = abs(t1);
  if (den > bound) return std::nullopt;
  mpz_class num = (sgn(t1) < 0) ? mpz_class(-r1) : r1;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  return make_rational(num, den);
}

/// Exact check that m . x^T = 0 for a rational row vector x.
bool verify_kernel_vector(const IntMat& m, const std::vector<Rat>& x) {
  mpz_class lcm_den(1);
  for (const Rat& v : x) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
  }
  std::vector<mpz_class> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = x[i].get_num() * (lcm_den / x[i].get_den());
  }
  mpz_class acc;
  for (int r = 0; r < m.rows; ++r) {
    acc = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (sgn(z[c]) != 0 && sgn(m.at(r, c)) != 0) {
        mpz_addmul(acc.get_mpz_t(), m.at(r, c).get_mpz_t(), z[c].get_mpz_t());
      }
    }
    if (sgn(acc) != 0) return false;
  }
  return true;
}

std::optional<QMat> try_modular_kernel(const IntMat& m, bool two_primes) {
  const ModRref r1 = mod_rref(m, kP1);
  mpz_class modulus = mpz_class(static_cast<unsigned long>(kP1));
  std::optional<ModRref> r2;
  if (two_primes) {
    r2 = mod_rref(m, kP2);
    if (r2->rank != r1.rank || r2->pivot_cols != r1.pivot_cols) return std::nullopt;
    modulus *= mpz_class(static_cast<unsigned long>(kP2));
  }
  const mpz_class bound = sqrt((modulus - 1) / 2);
  const std::uint64_t inv_p1 = two_primes ? powmod(kP1 % kP2, kP2 - 2, kP2) : 0;

  const auto& pc = r1.pivot_cols;
  QMat kernel(static_cast<int>(r1.free_cols.size()), m.cols);
  std::vector<Rat> x(static_cast<std::size_t>(m.cols));
  for (std::size_t fi = 0; fi < r1.free_cols.size(); ++fi) {
    const int f = r1.free_cols[fi];
    for (auto& v : x) v = 0;
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t pi = 0; pi < pc.size(); ++pi) {
      const std::uint64_t a1 = r1.m[pi * r1.cols + f];
      mpz_class residue(static_cast<unsigned long>(a1));
      if (two_primes) {
        // CRT for the pair (a1 mod p1, a2 mod p2).
        const std::uint64_t a2 = r2->m[pi * r2->cols + f];
        const std::uint64_t a1p2 = a1 % kP2;
        const std::uint64_t diff = (a2 >= a1p2) ? a2 - a1p2 : a2 + kP2 - a1p2;
        const std::uint64_t t = mulmod(diff, inv_p1, kP2);
        residue += mpz_class(static_cast<unsigned long>(kP1)) * mpz_class(static_cast<unsigned long>(t));
      }
      auto lifted = rat_reconstruct(residue, modulus, bound);
      if (!lifted) return std::nullopt;
      x[static_cast<std::size_t>(pc[pi])] = -*lifted;
    }
    if (!verify_kernel_vector(m, x)) return std::nullopt;
    for (int c = 0; c < m.cols; ++c) kernel.at(static_cast<int>(fi), c) = x[static_cast<std::size_t>(c)];
  }
  return kernel;
}

}  // namespace

int rank_exact(IntMat m) {
  BareissState<long long> s64;
  s64.rows = m.rows;
  s64.cols = m.cols;
  s64.a.resize(m.a.size());
  bool fits64 = true;
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    if (!m.a[i].fits_slong_p()) {
      fits64 = false;
      break;
    }
    s64.a[i] = m.a[i].get_si();
  }
  if (fits64) {
    if (bareiss_run<long long>(s64, 2000000000LL)) return s64.row;
    auto s128 = escalate<long long, __int128>(s64, [](long long v) { return static_cast<__int128>(v); });
    // Entries must stay below sqrt(int128_max / 2) so cross products cannot overflow.
    const __int128 limit = static_cast<__int128>(9000000000000000000LL);
    if (bareiss_run<__int128>(s128, limit)) return s128.row;
    auto smp = escalate<__int128, mpz_class>(s128, int128_to_mpz);
    bareiss_run<mpz_class>(smp, mpz_class(0));
    return smp.row;
  }
  BareissState<mpz_class> smp;
  smp.rows = m.rows;
  smp.cols = m.cols;
  smp.a = std::move(m.a);
  bareiss_run<mpz_class>(smp, mpz_class(0));
  return smp.row;
}

KernelResult kernel_exact(const IntMat& m) {
  bool all_zero = true;
  for (const mpz_class& v : m.a) {
    if (sgn(v) != 0) {
      all_zero = false;
      break;
    }
  }
  if (m.rows == 0 || m.cols == 0 || all_zero) {
    KernelResult out;
    out.rank = 0;
    out.kernel = QMat(m.cols, m.cols);
    for (int i = 0; i < m.cols; ++i) out.kernel.at(i, i) = 1;
    out.fast_path = true;
    return out;
  }
  for (int attempt = 0; attempt < 2; ++attempt) {
    auto kernel = try_modular_kernel(m, attempt == 1);
    if (kernel) {
      KernelResult out;
      out.kernel = std::move(*kernel);
      out.rank = m.cols - out.kernel.rows;
      out.fast_path = true;
      return out;
    }
  }
  QMat q(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) q.at(r, c) = Rat(m.at(r, c));
  KernelResult out;
  out.kernel = nullspace_rows(q);
  out.rank = m.cols - out.kernel.rows;
  out.fast_path = false;
  return out;
}

int rank_reference(const QMat& m) { return rref(m).rank(); }

}  // namespace kforms
