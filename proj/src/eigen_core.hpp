#pragma once

// Dense symmetric eigendecomposition and diagonal-plus-rank-one (DPR1)
// eigenproblems solved through the secular equation.

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "dense.hpp"

namespace modspec {

class SymmetricMatrix {
 public:
  // Throws InvalidInput when `m` is empty, not square, has a non-finite entry,
  // or is not exactly symmetric.
  explicit SymmetricMatrix(DenseMatrix m);

  std::size_t size() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const DenseMatrix& dense() const noexcept { return m_; }

 private:
  DenseMatrix m_;
};

/// Eigenvalues sorted descending; column i of `eigenvectors` pairs with
/// `eigenvalues[i]`. Each column is sign-canonicalized: its largest-magnitude
/// entry is positive (lowest index wins ties).
struct EigenDecomposition {
  Vector eigenvalues;
  DenseMatrix eigenvectors;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  Vector vector(std::size_t i) const { return eigenvectors.col(i); }
};

class EigenSolver {
 public:
  virtual ~EigenSolver() = default;
  virtual EigenDecomposition solve(const SymmetricMatrix& m) const = 0;
};

// Cyclic Jacobi with threshold sweeps.
class JacobiEigenSolver final : public EigenSolver {
 public:
  explicit JacobiEigenSolver(int max_sweeps = 100) : max_sweeps_(max_sweeps) {}
  EigenDecomposition solve(const SymmetricMatrix& m) const override;

 private:
  int max_sweeps_;
};

EigenDecomposition eig_sym(const SymmetricMatrix& m);
EigenDecomposition eig_sym(const SymmetricMatrix& m, const EigenSolver& solver);

// Flips `v` in place so that its largest-magnitude entry is positive.
void canonicalize_sign(std::span<double> v);

/// D + rho * y yᵀ with D = diag(d).
class Dpr1System {
 public:
  // Throws InvalidInput on length mismatch, empty input, non-finite values or
  // when | ||y|| - 1 | > 1e-12.
  Dpr1System(Vector d, double rho, Vector y);

  const Vector& d() const noexcept { return d_; }
  double rho() const noexcept { return rho_; }
  const Vector& y() const noexcept { return y_; }
  std::size_t size() const noexcept { return d_.size(); }

  DenseMatrix assemble() const;

 private:
  Vector d_;
  double rho_;
  Vector y_;
};

struct SecularRootReport {
  Vector roots;  // ascending
  std::vector<std::pair<double, double>> brackets;
  std::vector<int> iterations;
  Vector residuals;  // |f(root)| relative to the secular-function scale
  std::vector<bool> deflated;
};

inline constexpr double kDeflationTolerance = 1e-14;
inline constexpr double kPoleTolerance = 1e-13;
inline constexpr double kRootTolerance = 1e-13;
inline constexpr int kMaxRootIterations = 200;

// f(λ) = 1 + rho * Σ y_i² / (d_i − λ), accumulated left to right.
double secular_eval(const Dpr1System& sys, double lambda);

SecularRootReport dpr1_eigenvalues(const Dpr1System& sys);

// Unit vector with components y_i / (d_i − λ̃).
Vector dpr1_eigenvector(const Dpr1System& sys, double lambda_tilde);

}  // namespace modspec
