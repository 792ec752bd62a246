#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigen_core.hpp"
#include "graph_matrices.hpp"
#include "modularity_spectral.hpp"

namespace modspec {

enum class Method {
  UnnormalizedSpectral,  // L
  Modularity,            // B
  NormalizedSpectral,    // L_sym
  NormalizedModularity,  // B_sym
  NormalizedAdjacency,   // A_sym
  AdjacencyApprox,       // A_p
  GroundTruth,
};

struct MethodId {
  Method method = Method::Modularity;
  std::size_t p = 0;  // AdjacencyApprox only

  std::string name() const;  // "L", "B", "L_sym", "B_sym", "A_sym", "A_3", "truth"
  bool operator==(const MethodId&) const = default;
};

struct Partition {
  std::vector<std::uint8_t> labels;  // 0 or 1
  MethodId method;
  bool trivial = false;
  std::size_t zero_entries = 0;
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return labels.size(); }
};

inline constexpr double kSignTolerance = 1e-12;
inline constexpr double kTrivialTolerance = 1e-10;
inline constexpr double kSimplicityTolerance = 1e-9;

// Builds a partition from explicit labels; throws InvalidInput unless every
// label is 0 or 1.
Partition make_partition(std::vector<std::uint8_t> labels, MethodId method);

// Label 1 where x_i > tol, 0 where x_i < −tol; |x_i| ≤ tol goes to label 1
// and is counted in `zero_entries`. Throws Degenerate when every entry is
// within tol of zero.
Partition sign_partition(std::span<const double> x, double tol = kSignTolerance,
                         MethodId method = {});

Partition trivial_partition(std::size_t n, MethodId method);

Partition fiedler_partition(const GraphMatrices& gm, double tol = kSignTolerance);
Partition modularity_partition(const GraphMatrices& gm,
                               double tol = kSignTolerance);

struct NormalizedPartitions {
  Partition lap_sym;
  Partition mod_sym;
  Partition a_sym;
  double mod_sym_beta1 = 0.0;
  bool assumptions_hold = false;
  // Set when the B_sym / A_sym bipartitions were compared; false otherwise.
  std::optional<bool> equivalent;
  std::vector<std::string> warnings;
};

NormalizedPartitions normalized_partitions(const GraphMatrices& gm,
                                           double tol = kSignTolerance);

Partition approx_partition(const GraphMatrices& gm,
                           const EigenDecomposition& eig_a, std::size_t p,
                           double tol = kSignTolerance);
Partition approx_partition(const ModularityExpansion& me,
                           const EigenDecomposition& eig_a, std::size_t p,
                           double tol = kSignTolerance);

}  // namespace modspec
