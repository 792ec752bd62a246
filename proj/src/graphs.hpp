#pragma once

// Small named graphs and a seeded random-graph generator.

#include <cstddef>

#include "graph_matrices.hpp"
#include "random.hpp"

namespace modspec::graphs {

AdjacencyMatrix path(std::size_t n);
AdjacencyMatrix cycle(std::size_t n);
AdjacencyMatrix complete(std::size_t n);
// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
AdjacencyMatrix barbell();
// The barbell plus node 6 hanging off node 5.
AdjacencyMatrix pendant_barbell();

// Erdos-Renyi G(n, p) redrawn until connected (at most `max_attempts` draws).
AdjacencyMatrix random_connected(Rng& rng, std::size_t n, double p,
                                 int max_attempts = 1000);

}  // namespace modspec::graphs
