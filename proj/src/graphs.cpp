#include "graphs.hpp"

#include "error.hpp"

namespace modspec::graphs {

AdjacencyMatrix path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return AdjacencyMatrix::from_edges(n, edges);
}

AdjacencyMatrix cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return AdjacencyMatrix::from_edges(n, edges);
}

AdjacencyMatrix complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return AdjacencyMatrix::from_edges(n, edges);
}

AdjacencyMatrix barbell() {
  return AdjacencyMatrix::from_edges(
      6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

AdjacencyMatrix pendant_barbell() {
  return AdjacencyMatrix::from_edges(
      7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 6}});
}

AdjacencyMatrix random_connected(Rng& rng, std::size_t n, double p, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::uint8_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.bernoulli(p)) e[i * n + j] = e[j * n + i] = 1;
    AdjacencyMatrix a(n, std::move(e));
    if (check_connected(a).count == 1) return a;
  }
  throw Error(ErrorKind::Numeric, "could not draw a connected random graph");
}

}  // namespace modspec::graphs
