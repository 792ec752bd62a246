#pragma once

// Leading eigenvector of the modularity matrix B = A − ddᵀ/(2m) written
// exactly in the eigenbasis of A, and its top-p truncations.

#include <cstddef>
#include <utility>
#include <vector>

#include "eigen_core.hpp"
#include "graph_matrices.hpp"

namespace modspec {

inline constexpr double kExpansionPoleTolerance = 1e-9;

struct ModularityExpansion {
  double beta1 = 0.0;   // largest eigenvalue of B
  double sigma1 = 0.0;  // largest eigenvalue of A
  double sigma2 = 0.0;
  double delta = 0.0;   // beta1 − sigma2
  Vector gammas;        // indexed like the eigenvalues of A (descending)
  std::vector<std::size_t> order;  // |gamma| nonincreasing, index tie-break
  double q = 0.0;       // ||b1||_2
  Vector b1;            // Σ gamma_i u_i, exactly as the formula gives it
  double coefficient_scale = 0.0;  // ||Uᵀd||_2
  Vector beta_spectrum;            // all eigenvalues of B, descending
  SecularRootReport roots;

  // b1 / q with the eigensolver's sign convention applied.
  Vector leading_eigenvector() const;
};

// Throws ErrorKind::Assumption when beta1 lies within 1e-9 of sigma1 or
// sigma2; secular root failures propagate unchanged.
ModularityExpansion expand_modularity(const GraphMatrices& gm,
                                      const EigenDecomposition& eig_a);

struct ApproximationResult {
  std::size_t p = 0;
  Vector v;
  double e_rel = 0.0;   // (1/q) sqrt(Σ_{j>p} gamma_{i_j}²)
  double e_meas = 0.0;  // ||b1 − v|| / ||b1||
};

ApproximationResult approximate(const ModularityExpansion& me,
                                const EigenDecomposition& eig_a, std::size_t p);

// (index, |gamma|) pairs in the truncation order.
std::vector<std::pair<std::size_t, double>> gamma_spectrum(
    const ModularityExpansion& me);

// Stable ordering of indices by |values| nonincreasing.
std::vector<std::size_t> magnitude_order(const Vector& values);

}  // namespace modspec
