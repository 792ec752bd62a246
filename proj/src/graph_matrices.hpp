#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dense.hpp"
#include "eigen_core.hpp"

namespace modspec {

// Binary symmetric adjacency matrix with zero diagonal.
class AdjacencyMatrix {
 public:
  // Throws InvalidInput unless `entries` is n*n, binary, symmetric and has a
  // zero diagonal.
  AdjacencyMatrix(std::size_t n, std::vector<std::uint8_t> entries);

  static AdjacencyMatrix from_edges(
      std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j] != 0;
  }
  std::int64_t degree(std::size_t i) const;
  std::int64_t edge_count() const;

  // Subgraph induced by `nodes` (kept in the given order).
  AdjacencyMatrix induced(const std::vector<std::size_t>& nodes) const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> entries_;
};

struct ComponentLabeling {
  std::vector<std::size_t> labels;  // component id per node, ids in BFS order
  std::size_t count = 0;

  std::vector<std::size_t> sizes() const;
  // Nodes of the largest component, ascending; ties go to the lower id.
  std::vector<std::size_t> largest() const;
};

ComponentLabeling check_connected(const AdjacencyMatrix& a);

struct GraphMatrices {
  AdjacencyMatrix a;
  std::vector<std::int64_t> degrees;
  std::int64_t m = 0;
  SymmetricMatrix adj;      // A
  SymmetricMatrix lap;      // L = D − A
  SymmetricMatrix mod;      // B = A − ddᵀ/(2m)
  SymmetricMatrix p;        // P = ddᵀ/(2m)
  SymmetricMatrix a_sym;    // D^{-1/2} A D^{-1/2}
  SymmetricMatrix lap_sym;  // D^{-1/2} L D^{-1/2}
  SymmetricMatrix mod_sym;  // D^{-1/2} B D^{-1/2}
  Vector sqrt_d_e;          // D^{1/2} e

  std::size_t size() const noexcept { return a.size(); }
  Vector degree_vector() const;
  DenseMatrix degree_matrix() const;
};

// Throws ErrorKind::Degree for an isolated node and ConnectivityError when the
// graph has more than one component.
GraphMatrices build_matrices(const AdjacencyMatrix& a);

struct InvariantViolation {
  std::string name;
  double value;
  double tolerance;
};

// Evaluates the structural identities every GraphMatrices must satisfy
// (zero row sums of B and L, D^{1/2}e in the null spaces of L_sym and B_sym,
// L_sym = I − A_sym, rank(P) = 1, xᵀLx ≥ 0 on pseudo-random x).
std::vector<InvariantViolation> check_invariants(const GraphMatrices& gm,
                                                 std::uint64_t seed = 1);

}  // namespace modspec
