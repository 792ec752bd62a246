#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "eigen_core.hpp"
#include "error.hpp"
#include "graphs.hpp"
#include "random.hpp"
#include "support.hpp"

using namespace modspec;

namespace {

SymmetricMatrix sym(std::size_t n, std::initializer_list<double> v) {
  DenseMatrix m(n, n);
  std::copy(v.begin(), v.end(), m.data().begin());
  return SymmetricMatrix(m);
}

SymmetricMatrix random_symmetric(Rng& rng, std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rng.uniform(-1.0, 1.0);
  return SymmetricMatrix(m);
}

// Characteristic polynomial of the n-node path: p_k(x) = x p_{k-1} − p_{k-2}.
double path_charpoly(std::size_t n, double x) {
  double pm2 = 1.0, pm1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double p = x * pm1 - pm2;
    pm2 = pm1;
    pm1 = p;
  }
  return pm1;
}

}  // namespace

TEST_CASE("symmetric matrix validation") {
  CHECK_THROWS_AS(SymmetricMatrix(DenseMatrix(2, 3)), Error);
  CHECK_THROWS_AS(SymmetricMatrix(DenseMatrix(0, 0)), Error);
  DenseMatrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(SymmetricMatrix{m}, Error);
  m(1, 0) = 1.0;
  m(0, 0) = std::nan("");
  CHECK_THROWS_AS(SymmetricMatrix{m}, Error);
}

TEST_CASE("identity has unit spectrum") {
  const auto e = eig_sym(SymmetricMatrix(DenseMatrix::identity(3)));
  for (double l : e.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(testing::orthogonality_error(e.eigenvectors) < 1e-14);
}

TEST_CASE("diagonal matrix gives permuted axes") {
  const auto e = eig_sym(sym(3, {3, 0, 0, 0, 1, 0, 0, 0, 2}));
  CHECK(e.eigenvalues == Vector{3.0, 2.0, 1.0});
  CHECK(e.vector(0) == Vector{1.0, 0.0, 0.0});
  CHECK(e.vector(1) == Vector{0.0, 0.0, 1.0});
  CHECK(e.vector(2) == Vector{0.0, 1.0, 0.0});
}

TEST_CASE("path graph spectrum matches characteristic polynomial roots") {
  const auto roots = testing::scan_roots(
      [](double x) { return path_charpoly(4, x); }, -2.5, 2.5);
  REQUIRE(roots.size() == 4);
  const Vector frozen{1.618033988749895, 0.6180339887498949, -0.6180339887498947,
                      -1.618033988749895};
  const auto a = graphs::path(4);
  DenseMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = a(i, j) ? 1.0 : 0.0;
  const auto e = eig_sym(SymmetricMatrix(m));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::fabs(e.eigenvalues[k] - roots[3 - k]) < 1e-12);
    CHECK(std::fabs(e.eigenvalues[k] - frozen[k]) < 1e-12);
    CHECK(std::fabs(e.eigenvalues[k] - 2.0 * std::cos((k + 1) * std::numbers::pi / 5)) < 1e-12);
  }
}

TEST_CASE("random matrices reconstruct and stay orthonormal") {
  Rng rng(7);
  for (std::size_t n : {1u, 2u, 5u, 17u, 60u}) {
    const auto s = random_symmetric(rng, n);
    const auto e = eig_sym(s);
    CHECK(testing::reconstruction_error(s.dense(), e) < 1e-12);
    CHECK(testing::orthogonality_error(e.eigenvectors) < 1e-12);
    CHECK(std::is_sorted(e.eigenvalues.rbegin(), e.eigenvalues.rend()));
  }
}

TEST_CASE("fixed 3x3 spectrum against frozen reference") {
  // diag(3,2,1) − (1/3) eeᵀ, reference values from LAPACK dsyevd
  DenseMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = (i == j ? 3.0 - i : 0.0) - 1.0 / 3.0;
  const auto e = eig_sym(SymmetricMatrix(m));
  CHECK(e.eigenvalues[0] == doctest::Approx(2.79251721397434).epsilon(1e-13));
  CHECK(e.eigenvalues[1] == doctest::Approx(1.722351724464377).epsilon(1e-13));
  CHECK(e.eigenvalues[2] == doctest::Approx(0.4851310615612835).epsilon(1e-13));
  const Vector top{0.9613881059869325, -0.25169356471361076, -0.11128009322701904};
  CHECK(testing::max_abs_diff(e.vector(0), top) < 1e-12);
}

TEST_CASE("eigensolver is deterministic") {
  Rng rng(11);
  const auto s = random_symmetric(rng, 40);
  const auto e1 = eig_sym(s);
  const auto e2 = eig_sym(s);
  CHECK(e1.eigenvalues == e2.eigenvalues);
  CHECK(e1.eigenvectors == e2.eigenvectors);
}

TEST_CASE("sweep limit raises a convergence error") {
  Rng rng(3);
  const auto s = random_symmetric(rng, 30);
  CHECK_THROWS_AS(JacobiEigenSolver(1).solve(s), ConvergenceError);
}

TEST_CASE("sign canonicalization") {
  Vector v{0.2, -0.5, 0.5};
  canonicalize_sign(v);
  CHECK(v == Vector{-0.2, 0.5, -0.5});
  Vector w{0.1, -0.3};
  canonicalize_sign(w);
  CHECK(w == Vector{-0.1, 0.3});
  Vector u{-0.1, 0.3};
  canonicalize_sign(u);
  CHECK(u == Vector{-0.1, 0.3});
}

TEST_CASE("DPR1 system validation") {
  CHECK_THROWS_AS(Dpr1System({1.0, 2.0}, -1.0, {1.0}), Error);
  CHECK_THROWS_AS(Dpr1System({1.0, 2.0}, -1.0, {1.0, 1.0}), Error);
  CHECK_THROWS_AS(Dpr1System({}, -1.0, {}), Error);
  CHECK_THROWS_AS(Dpr1System({1.0}, std::nan(""), {1.0}), Error);
}

TEST_CASE("secular function evaluation") {
  const double r = 1.0 / std::sqrt(2.0);
  SUBCASE("zero perturbation") {
    Dpr1System sys({1.0, -1.0}, 0.0, {r, r});
    CHECK(secular_eval(sys, 0.3) == 1.0);
    CHECK(secular_eval(sys, -7.0) == 1.0);
  }
  SUBCASE("direct substitution") {
    // 1 − (0.5 / (1 − 0) + 0.5 / (−1 − 0)) = 1
    Dpr1System sys({1.0, -1.0}, -1.0, {r, r});
    CHECK(secular_eval(sys, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK(std::fabs(secular_eval(sys, g)) < 1e-14);
    CHECK(std::fabs(secular_eval(sys, -1.0 - g)) < 1e-14);
  }
  SUBCASE("sign flip across a pole") {
    const double t = 1.0 / std::sqrt(3.0);
    Dpr1System sys({3.0, 2.0, 1.0}, -1.0, {t, t, t});
    // 1 − (1/3) Σ 1/(d_i − λ) by hand
    const double below = 1.0 - (1.0 / 1.001 + 1.0 / 0.001 + 1.0 / -0.999) / 3.0;
    const double above = 1.0 - (1.0 / 0.999 + 1.0 / -0.001 + 1.0 / -1.001) / 3.0;
    CHECK(secular_eval(sys, 1.999) == doctest::Approx(below).epsilon(1e-10));
    CHECK(secular_eval(sys, 2.001) == doctest::Approx(above).epsilon(1e-10));
    CHECK(below < 0.0);
    CHECK(above > 0.0);
    CHECK(secular_eval(sys, 2.5) == doctest::Approx(11.0 / 9.0).epsilon(1e-14));
    CHECK_THROWS_AS(secular_eval(sys, 2.0), PoleError);
  }
}

TEST_CASE("DPR1 roots of a 2x2 system") {
  const double r = 1.0 / std::sqrt(2.0);
  Dpr1System sys({1.0, -1.0}, -1.0, {r, r});
  const auto rep = dpr1_eigenvalues(sys);
  REQUIRE(rep.roots.size() == 2);
  CHECK(std::fabs(rep.roots[0] - (-1.0 - std::sqrt(5.0)) / 2.0) < 1e-14);
  CHECK(std::fabs(rep.roots[1] - (-1.0 + std::sqrt(5.0)) / 2.0) < 1e-14);
  CHECK(rep.roots[0] <= -1.0);
  CHECK(rep.roots[1] >= -1.0);
  CHECK(rep.roots[1] <= 1.0);

  const auto x = dpr1_eigenvector(sys, rep.roots[1]);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  Vector expect{1.0 / (1.0 - g), 1.0 / (-1.0 - g)};
  const double ne = std::hypot(expect[0], expect[1]);
  for (double& v : expect) v /= ne;
  CHECK(testing::max_abs_diff(x, expect) < 1e-14);
  CHECK(expect[0] * ne == doctest::Approx(2.6180339887).epsilon(1e-9));
  CHECK(expect[1] * ne == doctest::Approx(-0.6180339887).epsilon(1e-9));
}

TEST_CASE("DPR1 roots of the 3x3 system against the dense oracle") {
  const double t = 1.0 / std::sqrt(3.0);
  Dpr1System sys({3.0, 2.0, 1.0}, -1.0, {t, t, t});
  const auto rep = dpr1_eigenvalues(sys);
  const auto dense = eig_sym(SymmetricMatrix(sys.assemble()));
  REQUIRE(rep.roots.size() == 3);
  CHECK(rep.roots[0] < 1.0);
  CHECK((rep.roots[1] > 1.0 && rep.roots[1] < 2.0));
  CHECK((rep.roots[2] > 2.0 && rep.roots[2] < 3.0));
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(std::fabs(rep.roots[k] - dense.eigenvalues[2 - k]) < 1e-12);

  const auto x = dpr1_eigenvector(sys, rep.roots[2]);
  CHECK(testing::sign_free_distance(x, dense.vector(0)) < 1e-8);
  const auto cx = multiply(sys.assemble(), x);
  double res = 0.0;
  for (std::size_t i = 0; i < 3; ++i) res += std::pow(cx[i] - rep.roots[2] * x[i], 2);
  CHECK(std::sqrt(res) < 1e-8);
}

TEST_CASE("standard basis perturbation deflates") {
  Dpr1System sys({4.0, 1.0, 2.5}, -0.75, {0.0, 1.0, 0.0});
  const auto rep = dpr1_eigenvalues(sys);
  CHECK(rep.roots == Vector{0.25, 2.5, 4.0});
  CHECK(std::count(rep.deflated.begin(), rep.deflated.end(), true) == 2);
}

TEST_CASE("positive rho and repeated diagonal entries") {
  Rng rng(5);
  Vector d{0.5, -1.0, 0.5, 2.0, 3.0, -1.0};
  Vector y(d.size());
  for (double& v : y) v = rng.uniform(0.1, 1.0);
  const double ny = norm2(y);
  for (double& v : y) v /= ny;
  for (double rho : {-2.0, 1.5}) {
    Dpr1System sys(d, rho, y);
    const auto rep = dpr1_eigenvalues(sys);
    const auto dense = eig_sym(SymmetricMatrix(sys.assemble()));
    for (std::size_t k = 0; k < d.size(); ++k)
      CHECK(std::fabs(rep.roots[k] - dense.eigenvalues[d.size() - 1 - k]) < 1e-12);
  }
}

TEST_CASE("zero rho is degenerate and poles are rejected") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(dpr1_eigenvalues(Dpr1System({1.0, 2.0}, 0.0, {r, r})), Error);
  Dpr1System sys({1.0, -1.0}, -1.0, {r, r});
  CHECK_THROWS_AS(dpr1_eigenvector(sys, 1.0), PoleError);
}

TEST_CASE("Newton step landing next to a pole is not accepted") {
  // with this rounding of 1/sqrt(2) the first Newton step from the midpoint
  // lands within one ulp of the pole at 1
  Dpr1System sys({1.0, -1.0}, -1.0, {std::sqrt(0.5), std::sqrt(0.5)});
  const auto rep = dpr1_eigenvalues(sys);
  CHECK(std::fabs(rep.roots[1] - (std::sqrt(5.0) - 1.0) / 2.0) < 1e-14);
  CHECK(rep.residuals[1] < 1e-12);
}

TEST_CASE("random DPR1 systems against the dense oracle") {
  Rng rng(123);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + rng.integer(0, 30);
    Vector d(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      // clustered diagonal with occasional exact repeats and zero weights
      d[i] = std::round(rng.uniform(-5.0, 5.0) * 4.0) / 4.0 + 1e-9 * rng.uniform();
      if (rng.bernoulli(0.1) && i > 0) d[i] = d[i - 1];
      y[i] = rng.bernoulli(0.1) ? 0.0 : rng.uniform(-1.0, 1.0);
    }
    if (norm2(y) == 0.0) y[0] = 1.0;
    const double ny = norm2(y);
    for (double& v : y) v /= ny;
    const double rho = rng.uniform(-10.0, 10.0);
    Dpr1System sys(d, rho, y);
    const auto rep = dpr1_eigenvalues(sys);
    const auto dense = eig_sym(SymmetricMatrix(sys.assemble()));
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      worst = std::fmax(worst, std::fabs(rep.roots[i] - dense.eigenvalues[n - 1 - i]));
    INFO("case " << k << " n " << n << " rho " << rho);
    CHECK(worst < 1e-9 * (1.0 + std::fabs(rho)));
  }
}
