#include <cmath>

#include "doctest.h"
#include "error.hpp"
#include "graph_matrices.hpp"
#include "graphs.hpp"
#include "random.hpp"

using namespace modspec;

TEST_CASE("adjacency validation") {
  CHECK_THROWS_AS(AdjacencyMatrix(2, {0, 1, 1}), Error);
  CHECK_THROWS_AS(AdjacencyMatrix(2, {0, 2, 2, 0}), Error);
  CHECK_THROWS_AS(AdjacencyMatrix(2, {0, 1, 0, 0}), Error);
  CHECK_THROWS_AS(AdjacencyMatrix(2, {1, 1, 1, 0}), Error);
  CHECK_THROWS_AS(AdjacencyMatrix::from_edges(3, {{0, 0}}), Error);
  CHECK_THROWS_AS(AdjacencyMatrix::from_edges(3, {{0, 3}}), Error);
}

TEST_CASE("single edge") {
  const auto gm = build_matrices(graphs::complete(2));
  CHECK(gm.m == 1);
  CHECK(gm.degrees == std::vector<std::int64_t>{1, 1});
  CHECK(gm.mod(0, 0) == -0.5);
  CHECK(gm.mod(0, 1) == 0.5);
  CHECK(gm.mod(1, 0) == 0.5);
  CHECK(gm.mod(1, 1) == -0.5);
}

TEST_CASE("three-node path has zero row sums") {
  const auto gm = build_matrices(graphs::path(3));
  CHECK(gm.degrees == std::vector<std::int64_t>{1, 2, 1});
  CHECK(gm.m == 2);
  for (std::size_t i = 0; i < 3; ++i) {
    double b = 0.0, l = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      b += gm.mod(i, j);
      l += gm.lap(i, j);
    }
    CHECK(std::fabs(b) < 1e-15);
    CHECK(l == 0.0);
  }
}

TEST_CASE("barbell degrees and edge count") {
  // edges {01, 02, 12, 23, 34, 35, 45}: triangle, bridge, triangle
  const auto a = graphs::barbell();
  const auto gm = build_matrices(a);
  CHECK(gm.m == 7);
  CHECK(a.edge_count() == 7);
  CHECK(gm.degrees == std::vector<std::int64_t>{2, 2, 3, 3, 2, 2});
  CHECK(gm.degree_vector() == Vector{2, 2, 3, 3, 2, 2});
  CHECK(gm.degree_matrix()(2, 2) == 3.0);
  CHECK(gm.p(2, 3) == doctest::Approx(9.0 / 14.0));
  CHECK(gm.a_sym(2, 3) == doctest::Approx(1.0 / 3.0));
  CHECK(gm.a_sym(0, 1) == doctest::Approx(0.5));
  CHECK(gm.lap_sym(0, 0) == 1.0);
  CHECK(gm.sqrt_d_e[2] == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("connectivity") {
  CHECK(check_connected(graphs::complete(2)).count == 1);
  CHECK(check_connected(graphs::barbell()).count == 1);
  const auto two = AdjacencyMatrix::from_edges(4, {{0, 1}, {2, 3}});
  const auto lab = check_connected(two);
  CHECK(lab.count == 2);
  CHECK(lab.sizes() == std::vector<std::size_t>{2, 2});
  CHECK(lab.largest() == std::vector<std::size_t>{0, 1});
  try {
    build_matrices(two);
    FAIL("expected a connectivity error");
  } catch (const ConnectivityError& e) {
    CHECK(e.component_sizes() == std::vector<std::size_t>{2, 2});
  }
  const auto mixed = AdjacencyMatrix::from_edges(5, {{0, 1}, {2, 3}, {3, 4}});
  CHECK(check_connected(mixed).largest() == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("isolated nodes and tiny graphs are rejected") {
  const auto iso = AdjacencyMatrix::from_edges(3, {{0, 1}});
  try {
    build_matrices(iso);
    FAIL("expected a degree error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degree);
  }
  CHECK_THROWS_AS(build_matrices(AdjacencyMatrix(1, {0})), Error);
}

TEST_CASE("induced subgraph keeps the given order") {
  const auto sub = graphs::barbell().induced({3, 4, 5});
  CHECK(sub.size() == 3);
  CHECK(sub.edge_count() == 3);
}

TEST_CASE("structural identities hold on assorted graphs") {
  Rng rng(99);
  std::vector<AdjacencyMatrix> gs{graphs::complete(2), graphs::path(7),
                                  graphs::cycle(9), graphs::complete(6),
                                  graphs::barbell()};
  for (int k = 0; k < 10; ++k)
    gs.push_back(graphs::random_connected(rng, 10 + rng.integer(0, 40), 0.2));
  for (const auto& a : gs) {
    const auto gm = build_matrices(a);
    const auto bad = check_invariants(gm, 17);
    for (const auto& v : bad) INFO(v.name << " " << v.value << " > " << v.tolerance);
    CHECK(bad.empty());
    std::int64_t sum = 0;
    for (auto d : gm.degrees) sum += d;
    CHECK(sum == 2 * gm.m);
  }
}

TEST_CASE("random connected graphs are connected and reproducible") {
  Rng r1(4), r2(4);
  const auto a = graphs::random_connected(r1, 30, 0.1);
  const auto b = graphs::random_connected(r2, 30, 0.1);
  CHECK(check_connected(a).count == 1);
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < 30; ++j) CHECK(a(i, j) == b(i, j));
}
