#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "kforms/action.hpp"
#include "kforms/invariants.hpp"
#include "kforms/parse.hpp"
#include "kforms/sample.hpp"

using namespace kforms;

namespace {

Blade bl(std::vector<int> idx) { return blade_from_indices(idx); }

KVector column_vector(const QMat& m, int j) {
  detail::Terms terms;
  for (int i = 0; i < m.rows; ++i)
    if (!is_zero(m.at(i, j))) terms.emplace_back(Blade{1} << i, m.at(i, j));
  return make_alt<Variance::multivector>(m.rows, 1, std::move(terms));
}

}  // namespace

TEST_CASE("action on basis blades is the wedge of columns") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const GLElement g = random_gl(n, rng);
    const auto blades = blades_of_grade(n, 2 + static_cast<int>(rng() % 2));
    const Blade b = blades[rng() % blades.size()];
    KVector acc = basis_alt<Variance::multivector>(n, 0);
    for (int i : blade_indices(b)) acc = wedge(acc, column_vector(g.m, i - 1));
    CHECK(act(g, basis_alt<Variance::multivector>(n, b)) == acc);
  }
}

TEST_CASE("identity and scalar actions") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % 3);
    const KVector xi = random_kvector(n, k, rng);
    CHECK(act(gl_identity(n), xi) == xi);
    QMat two = scale(Rat(2), identity_matrix(n));
    Rat pow(1);
    for (int i = 0; i < k; ++i) pow *= 2;
    CHECK(act(make_gl(two), xi) == pow * xi);
  }
}

TEST_CASE("top grade transforms by the determinant") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 7; ++n) {
    const GLElement g = random_gl(n, rng);
    const Blade full = (Blade{1} << n) - 1;
    auto omega = basis_alt<Variance::multivector>(n, full);
    CHECK(act(g, omega) == g.det * omega);
    auto vol = basis_alt<Variance::form>(n, full);
    CHECK(act(g, vol) == g.det * vol);
  }
}

TEST_CASE("form action is adjoint to the multivector action") {
  // (g . alpha)(xi) = alpha(g . xi), with the inverse moved across:
  // act(g, alpha) evaluated on act(gl_inverse(g), xi) recovers alpha(xi).
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    const GLElement g = random_gl(n, rng);
    const KVector xi = random_kvector(n, k, rng);
    const KForm alpha = as_form(random_kvector(n, k, rng));
    CHECK(evaluate(act(g, alpha), xi) == evaluate(alpha, act(g, xi)));
  }
}

TEST_CASE("composition laws") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 25; ++t) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    const GLElement g = random_gl(n, rng);
    const GLElement h = random_gl(n, rng);
    const KVector xi = random_kvector(n, k, rng);
    CHECK(act(g, act(h, xi)) == act(g * h, xi));
    // On forms the pullback-style convention reverses the order.
    const KForm alpha = as_form(xi);
    CHECK(act(g, act(h, alpha)) == act(h * g, alpha));
    CHECK(act(gl_inverse(g), act(g, alpha)) == alpha);
  }
}

TEST_CASE("action distributes over wedge") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 25; ++t) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const GLElement g = random_gl(n, rng);
    const KVector a = random_kvector(n, 1 + static_cast<int>(rng() % 2), rng);
    const KVector b = random_kvector(n, 1 + static_cast<int>(rng() % 2), rng);
    CHECK(act(g, wedge(a, b)) == wedge(act(g, a), act(g, b)));
  }
}

TEST_CASE("infinitesimal action satisfies the Leibniz rule") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 25; ++t) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 2);
    QMat x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x.at(i, j) = Rat(static_cast<long>(rng() % 5) - 2);
    // Decomposable xi = v1 ^ ... ^ vk from random columns.
    std::vector<KVector> vs;
    QMat cols(n, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < n; ++i) cols.at(i, j) = Rat(static_cast<long>(rng() % 5) - 2);
    for (int j = 0; j < k; ++j) vs.push_back(column_vector(cols, j));
    KVector xi = vs[0];
    for (int j = 1; j < k; ++j) xi = wedge(xi, vs[j]);

    KVector want = zero_alt<Variance::multivector>(n, k);
    for (int j = 0; j < k; ++j) {
      // Replace v_j by X v_j.
      QMat xv(n, 1);
      for (int i = 0; i < n; ++i) {
        Rat s(0);
        for (int c = 0; c < n; ++c) s += x.at(i, c) * cols.at(c, j);
        xv.at(i, 0) = s;
      }
      KVector term = j == 0 ? column_vector(xv, 0) : vs[0];
      for (int m = 1; m < k; ++m) term = wedge(term, m == j ? column_vector(xv, 0) : vs[m]);
      want = want + term;
    }
    CHECK(infinitesimal_action(x, xi) == want);
  }
}

TEST_CASE("Euler identity: the identity matrix scales by the grade") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 10; ++t) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = static_cast<int>(rng() % (n + 1));
    const KVector xi = random_kvector(n, k, rng);
    CHECK(infinitesimal_action(identity_matrix(n), xi) == Rat(k) * xi);
    const KForm alpha = as_form(xi);
    CHECK(infinitesimal_action(identity_matrix(n), alpha) == Rat(k) * alpha);
  }
}

TEST_CASE("infinitesimal action differentiates the group action") {
  // For X = c E_ij with i != j, inserting X twice into a blade repeats e_i,
  // so act(I + tX) xi is exactly affine in t and the linear part must equal
  // the infinitesimal action: (act(I+X) - act(I-X)) xi / 2.
  std::mt19937_64 rng(67);
  for (int t = 0; t < 25; ++t) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 1 + static_cast<int>(rng() % 3);
    QMat x(n, n);
    const int i = static_cast<int>(rng() % n);
    int j = static_cast<int>(rng() % n);
    if (j == i) j = (j + 1) % n;
    x.at(i, j) = Rat(1 + static_cast<long>(rng() % 3));
    const GLElement plus = make_gl(identity_matrix(n) + x);
    const GLElement minus = make_gl(identity_matrix(n) + scale(Rat(-1), x));
    const KVector xi = random_kvector(n, k, rng);
    const KVector diff = make_rational(1, 2) * (act(plus, xi) - act(minus, xi));
    // Single-entry X: the quadratic and higher insert terms cancel pairwise
    // between +X and -X only in odd total degree; for E_ij with i != j any
    // double insertion kills the blade, so the difference is exactly linear.
    CHECK(diff == infinitesimal_action(x, xi));
  }
}

TEST_CASE("tangent matrix linearizes the infinitesimal action") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 15; ++t) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 2);
    KForm alpha = primitive_scale(as_form(random_kvector(n, k, rng)));
    const IntMat tm = tangent_matrix(alpha);
    const auto rows = blades_of_grade(n, k);
    CHECK(tm.rows == static_cast<int>(rows.size()));
    CHECK(tm.cols == n * n);
    QMat x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x.at(i, j) = Rat(static_cast<long>(rng() % 5) - 2);
    const KForm dx = infinitesimal_action(x, alpha);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rat s(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s += Rat(tm.at(static_cast<int>(r), i * n + j)) * x.at(i, j);
      CHECK(s == dx.coeff(rows[r]));
    }
  }
}

TEST_CASE("tangent matrix respects variance") {
  std::mt19937_64 rng(73);
  const KVector xi = random_kvector(5, 2, rng);
  const IntMat tv = tangent_matrix(xi);
  QMat x(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) x.at(i, j) = Rat(static_cast<long>(rng() % 5) - 2);
  const KVector dx = infinitesimal_action(x, primitive_scale(xi));
  const auto rows = blades_of_grade(5, 2);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rat s(0);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) s += Rat(tv.at(static_cast<int>(r), i * 5 + j)) * x.at(i, j);
    CHECK(s == dx.coeff(rows[r]));
  }
}

TEST_CASE("orbit tangent rank oracles") {
  // dim GL(n) orbit of e^1 is n; of the volume form is 1; of a stable form
  // is the full C(n,k).
  CHECK(orbit_tangent_rank(parse_form("e1", 5)) == 5);
  CHECK(orbit_tangent_rank(parse_form("e1234", 4)) == 1);
  CHECK(orbit_tangent_rank(parse_form("e123+e456", 6)) == 20);
  CHECK(orbit_tangent_rank(parse_form("e12+e34+e56", 6)) == 15);
  CHECK(orbit_tangent_rank(parse_form("e123", 6)) == 10);
  CHECK(orbit_tangent_rank(zero_alt<Variance::form>(5, 2)) == 0);
  CHECK(stabilizer_dim(parse_form("e123+e456", 6)) == 16);
}

TEST_CASE("hodge dual oracles") {
  CHECK(hodge_dual(parse_multivector("e{1,2,3}", 7)) == parse_form("e4567", 7));
  CHECK(hodge_dual(parse_multivector("e2", 3)) == parse_form("-e13", 3));
  std::mt19937_64 rng(79);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int k = static_cast<int>(rng() % (n + 1));
    const KVector xi = random_kvector(n, k, rng);
    CHECK(inverse_hodge_dual(hodge_dual(xi)) == xi);
  }
}

TEST_CASE("duality equivariance") {
  // g . c(xi) = det(g) c(g^{-T}-style action): act(g, hodge_dual(xi)) equals
  // det(g) * hodge_dual(act(gl_inverse(g), xi)).
  std::mt19937_64 rng(83);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int k = static_cast<int>(rng() % (n + 1));
    const GLElement g = random_gl(n, rng);
    const KVector xi = random_kvector(n, k, rng);
    CHECK(act(g, hodge_dual(xi)) == g.det * hodge_dual(act(gl_inverse(g), xi)));
  }
}

TEST_CASE("random_gl respects the requested determinant sign") {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    CHECK(sgn(random_gl(n, rng, +1).det) > 0);
    CHECK(sgn(random_gl(n, rng, -1).det) < 0);
    CHECK(!is_zero(random_gl(n, rng).det));
  }
}
