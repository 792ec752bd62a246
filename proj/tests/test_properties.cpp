#include <cmath>

#include "doctest.h"
#include "error.hpp"
#include "graphs.hpp"
#include "modularity_spectral.hpp"
#include "partitioning.hpp"
#include "properties.hpp"
#include "random.hpp"

using namespace modspec;

TEST_CASE("property suites") {
  for (std::uint64_t seed : {20150509ull, 7ull}) {
    PropertyOptions opts;
    opts.seed = seed;
    opts.graphs = 30;
    opts.max_nodes = 70;
    for (const auto& r : run_property_suites(opts)) {
      INFO(r.name << ": worst " << r.worst << " tol " << r.tolerance << " " << r.detail);
      CHECK(r.passed);
      CHECK(r.checked > 0);
    }
  }
}

TEST_CASE("small error bound forces the sign pattern") {
  Rng rng(314);
  std::size_t applicable = 0;
  for (int g = 0; g < 40; ++g) {
    const std::size_t n = 10 + rng.integer(0, 50);
    const auto gm = build_matrices(graphs::random_connected(rng, n, rng.uniform(0.1, 0.4)));
    const auto eig_a = eig_sym(gm.adj);
    ModularityExpansion me;
    try {
      me = expand_modularity(gm, eig_a);
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::Assumption);
      continue;
    }
    double min_entry = INFINITY;
    for (double b : me.b1) min_entry = std::fmin(min_entry, std::fabs(b));
    const double bound = 0.5 * min_entry / me.q;
    for (std::size_t p = 1; p <= n; ++p) {
      const auto r = approximate(me, eig_a, p);
      if (!(r.e_rel < bound)) continue;
      ++applicable;
      for (std::size_t i = 0; i < n; ++i) CHECK((r.v[i] > 0) == (me.b1[i] > 0));
    }
  }
  CHECK(applicable > 0);
}
