#include <cmath>

#include "doctest.h"
#include "error.hpp"
#include "graphs.hpp"
#include "modularity_spectral.hpp"
#include "random.hpp"
#include "support.hpp"

using namespace modspec;

namespace {

struct Fixture {
  GraphMatrices gm;
  EigenDecomposition eig_a;
  ModularityExpansion me;
  explicit Fixture(const AdjacencyMatrix& a)
      : gm(build_matrices(a)), eig_a(eig_sym(gm.adj)), me(expand_modularity(gm, eig_a)) {}
};

}  // namespace

TEST_CASE("symmetric barbell meets sigma2 and is rejected") {
  // the antisymmetric adjacency eigenvector is orthogonal to d, so it is also
  // the leading modularity eigenvector with beta1 = sigma2 = sqrt(3)
  const auto gm = build_matrices(graphs::barbell());
  const auto eig_a = eig_sym(gm.adj);
  try {
    expand_modularity(gm, eig_a);
    FAIL("expected an assumption error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Assumption);
  }
  const auto dense = eig_sym(gm.mod);
  CHECK(dense.eigenvalues[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
  CHECK(eig_a.eigenvalues[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
}

TEST_CASE("pendant barbell expansion against frozen dense reference") {
  Fixture f(graphs::pendant_barbell());
  // reference: LAPACK dsyevd on B and A
  CHECK(f.me.beta1 == doctest::Approx(1.8415498901082246).epsilon(1e-13));
  CHECK(f.me.sigma1 == doctest::Approx(2.4763465753798015).epsilon(1e-13));
  CHECK(f.me.sigma2 == doctest::Approx(1.840827160188867).epsilon(1e-13));
  CHECK(f.me.delta == doctest::Approx(f.me.beta1 - f.me.sigma2));
  CHECK(f.me.q == doctest::Approx(40.09786968618361).epsilon(1e-8));
  CHECK(f.me.coefficient_scale == doctest::Approx(std::sqrt(40.0)).epsilon(1e-14));

  const Vector b1 = f.me.leading_eigenvector();
  const Vector ref{0.4550031651887826,   0.45500316518878225, 0.37502146549592463,
                   -0.23121518905670368, -0.3645806688953441, -0.44806469985069053,
                   -0.24116723807075083};
  CHECK(testing::max_abs_diff(b1, ref) < 1e-9);
  for (std::size_t i = 0; i < 7; ++i) CHECK((b1[i] > 0) == (i < 3));

  const auto dense = eig_sym(f.gm.mod);
  CHECK(testing::sign_free_distance(b1, dense.vector(0)) < 1e-8);
  for (std::size_t k = 0; k < 7; ++k)
    CHECK(std::fabs(f.me.beta_spectrum[k] - dense.eigenvalues[k]) < 1e-9);

  const auto gs = gamma_spectrum(f.me);
  CHECK(gs[0].first == 1);
  CHECK(gs[0].second == doctest::Approx(40.067145221552131).epsilon(1e-8));
  CHECK(gs[1].first == 0);
  CHECK(gs[1].second == doctest::Approx(1.5690595512886532).epsilon(1e-8));
  CHECK(gs[2].first == 2);
  CHECK(gs[2].second == doctest::Approx(0.022860945871720498).epsilon(1e-8));
  CHECK(gs[6].first == 4);
  CHECK(gs[6].second < 1e-12);
}

TEST_CASE("pendant barbell truncation errors") {
  Fixture f(graphs::pendant_barbell());
  const double ref[] = {0.03913932223196399, 0.0008193089913725784, 0.000588405048789762,
                        0.0003526816774415774, 0.0001841061130714518};
  for (std::size_t p = 1; p <= 7; ++p) {
    const auto r = approximate(f.me, f.eig_a, p);
    // direct oracle: ||b1 − v|| / ||b1||
    Vector diff(7);
    for (std::size_t i = 0; i < 7; ++i) diff[i] = f.me.b1[i] - r.v[i];
    const double direct = norm2(diff) / norm2(f.me.b1);
    CHECK(std::fabs(r.e_rel - direct) < 1e-10);
    CHECK(std::fabs(r.e_meas - direct) < 1e-15);
    if (p <= 5) CHECK(r.e_rel == doctest::Approx(ref[p - 1]).epsilon(1e-6));
  }
  const auto full = approximate(f.me, f.eig_a, 7);
  CHECK(full.e_rel == 0.0);
  CHECK(full.v == f.me.b1);
  CHECK_THROWS_AS(approximate(f.me, f.eig_a, 0), Error);
  CHECK_THROWS_AS(approximate(f.me, f.eig_a, 8), Error);
}

TEST_CASE("complete graph keeps beta1 = 0 clear of sigma2 = -1") {
  Fixture f(graphs::complete(5));
  CHECK(std::fabs(f.me.beta1) < 1e-12);
  CHECK(f.me.sigma2 == doctest::Approx(-1.0));
}

TEST_CASE("random graph expansion matches the dense oracle") {
  Rng rng(50);
  const auto a = graphs::random_connected(rng, 50, 0.15);
  Fixture f(a);
  const auto dense = eig_sym(f.gm.mod);
  CHECK(testing::sign_free_distance(f.me.leading_eigenvector(), dense.vector(0)) < 1e-8);
  CHECK(std::fabs(f.me.beta1 - dense.eigenvalues[0]) < 1e-9);
  CHECK(f.me.sigma2 < f.me.beta1);
  CHECK(f.me.beta1 < f.me.sigma1);

  double prev = 2.0;
  for (std::size_t p = 1; p <= 50; ++p) {
    const auto r = approximate(f.me, f.eig_a, p);
    CHECK(r.e_rel <= prev + 1e-15);
    CHECK(std::fabs(r.e_rel - r.e_meas) < 1e-10);
    prev = r.e_rel;
  }
}

TEST_CASE("regular graphs violate the expansion precondition") {
  std::vector<std::pair<std::size_t, std::size_t>> cube;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t bit : {1u, 2u, 4u})
      if (i < (i ^ bit)) cube.push_back({i, i ^ bit});
  // beta1 = sigma2 = 1 for the 6-cycle and the 3-cube
  for (const auto& a : {graphs::cycle(6), AdjacencyMatrix::from_edges(8, cube)}) {
    const auto gm = build_matrices(a);
    const auto eig_a = eig_sym(gm.adj);
    try {
      expand_modularity(gm, eig_a);
      FAIL("expected an assumption error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Assumption);
    }
  }
}

TEST_CASE("magnitude ordering") {
  CHECK(magnitude_order({0.1, -3.0, 2.0}) == std::vector<std::size_t>{1, 2, 0});
  CHECK(magnitude_order({1.0, -1.0, 1.0}) == std::vector<std::size_t>{0, 1, 2});
  CHECK(magnitude_order({0.0, 2.0, -2.0, 0.0}) == std::vector<std::size_t>{1, 2, 0, 3});
}

TEST_CASE("gamma spectrum is stable under recomputation") {
  Rng rng(8);
  const auto a = graphs::random_connected(rng, 30, 0.2);
  Fixture f1(a), f2(a);
  CHECK(gamma_spectrum(f1.me) == gamma_spectrum(f2.me));
  const auto s = gamma_spectrum(f1.me);
  for (std::size_t j = 1; j < s.size(); ++j) CHECK(s[j].second <= s[j - 1].second);
}
