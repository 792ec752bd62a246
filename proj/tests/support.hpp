#pragma once
#include <cmath>
#include <cstddef>
#include <functional>

#include "dense.hpp"
#include "eigen_core.hpp"

namespace testing {

inline double max_abs_diff(const modspec::Vector& a, const modspec::Vector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::fmax(worst, std::fabs(a[i] - b[i]));
  return worst;
}

// min over s in {+1, -1} of ||a - s b||_2
inline double sign_free_distance(const modspec::Vector& a, const modspec::Vector& b) {
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    plus += (a[i] - b[i]) * (a[i] - b[i]);
    minus += (a[i] + b[i]) * (a[i] + b[i]);
  }
  return std::sqrt(std::fmin(plus, minus));
}

// max |M − U diag(λ) Uᵀ|
inline double reconstruction_error(const modspec::DenseMatrix& m,
                                   const modspec::EigenDecomposition& e) {
  const std::size_t n = m.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += e.eigenvectors(i, k) * e.eigenvalues[k] * e.eigenvectors(j, k);
      worst = std::fmax(worst, std::fabs(s - m(i, j)));
    }
  return worst;
}

// max |UᵀU − I|
inline double orthogonality_error(const modspec::DenseMatrix& u) {
  const std::size_t n = u.cols();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < u.rows(); ++k) s += u(k, i) * u(k, j);
      worst = std::fmax(worst, std::fabs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

// All roots of a polynomial with only real, simple roots in [lo, hi], found by
// scanning for sign changes on a fine grid and bisecting each one.
inline modspec::Vector scan_roots(const std::function<double(double)>& f, double lo,
                                  double hi, std::size_t steps = 200000) {
  modspec::Vector roots;
  const double h = (hi - lo) / static_cast<double>(steps);
  double a = lo, fa = f(a);
  for (std::size_t s = 1; s <= steps; ++s) {
    double b = lo + h * static_cast<double>(s), fb = f(b);
    if (fa == 0.0) roots.push_back(a);
    else if (fa * fb < 0.0) {
      double x0 = a, x1 = b, f0 = fa;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (x0 + x1);
        const double fm = f(mid);
        if (f0 * fm <= 0.0) x1 = mid;
        else { x0 = mid; f0 = fm; }
      }
      roots.push_back(0.5 * (x0 + x1));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

}  // namespace testing
