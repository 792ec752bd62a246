#include "modularity_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace modspec {

Vector ModularityExpansion::leading_eigenvector() const {
  Vector out = b1;
  for (double& x : out) x /= q;
  canonicalize_sign(out);
  return out;
}

std::vector<std::size_t> magnitude_order(const Vector& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(values[a]) > std::fabs(values[b]);
  });
  return order;
}

ModularityExpansion expand_modularity(const GraphMatrices& gm,
                                      const EigenDecomposition& eig_a) {
  const std::size_t n = gm.size();
  if (eig_a.size() != n || n < 2)
    throw Error(ErrorKind::InvalidInput,
                "adjacency decomposition does not match the graph");

  const Vector d = gm.degree_vector();
  const Vector utd = multiply_transposed(eig_a.eigenvectors, d);
  const double utd_norm = norm2(utd);
  Vector y = utd;
  for (double& v : y) v /= utd_norm;
  // Renormalize against rounding so the unit-vector check holds.
  const double ny = norm2(y);
  for (double& v : y) v /= ny;
  const double rho = -utd_norm * utd_norm / (2.0 * static_cast<double>(gm.m));

  const Dpr1System sys(eig_a.eigenvalues, rho, y);
  ModularityExpansion me;
  me.roots = dpr1_eigenvalues(sys);
  me.sigma1 = eig_a.eigenvalues[0];
  me.sigma2 = eig_a.eigenvalues[1];
  me.beta1 = me.roots.roots.back();
  me.beta_spectrum.assign(me.roots.roots.rbegin(), me.roots.roots.rend());

  if (std::fabs(me.beta1 - me.sigma1) <= kExpansionPoleTolerance ||
      std::fabs(me.beta1 - me.sigma2) <= kExpansionPoleTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "leading modularity eigenvalue " << me.beta1
        << " coincides with an adjacency eigenvalue (sigma1 = " << me.sigma1
        << ", sigma2 = " << me.sigma2 << "); the expansion has a pole";
    throw Error(ErrorKind::Assumption, msg.str());
  }
  me.delta = me.beta1 - me.sigma2;
  me.coefficient_scale = utd_norm;

  me.gammas.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    me.gammas[i] = utd[i] / ((eig_a.eigenvalues[i] - me.beta1) * utd_norm);
  me.order = magnitude_order(me.gammas);

  me.b1.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double g = me.gammas[i];
    for (std::size_t r = 0; r < n; ++r) me.b1[r] += g * eig_a.eigenvectors(r, i);
  }
  me.q = norm2(me.b1);
  return me;
}

ApproximationResult approximate(const ModularityExpansion& me,
                                const EigenDecomposition& eig_a, std::size_t p) {
  const std::size_t n = me.gammas.size();
  if (p < 1 || p > n) {
    std::ostringstream msg;
    msg << "approximation order p = " << p << " outside [1, " << n << "]";
    throw Error(ErrorKind::InvalidInput, msg.str());
  }

  ApproximationResult r;
  r.p = p;
  r.v.assign(n, 0.0);
  if (p == n) r.v = me.b1;
  for (std::size_t j = 0; j < p && p < n; ++j) {
    const std::size_t i = me.order[j];
    const double g = me.gammas[i];
    for (std::size_t row = 0; row < n; ++row) r.v[row] += g * eig_a.eigenvectors(row, i);
  }

  Vector tail;
  tail.reserve(n - p);
  for (std::size_t j = p; j < n; ++j) tail.push_back(me.gammas[me.order[j]]);
  r.e_rel = norm2(tail) / me.q;

  Vector diff(n);
  for (std::size_t row = 0; row < n; ++row) diff[row] = me.b1[row] - r.v[row];
  r.e_meas = norm2(diff) / norm2(me.b1);
  return r;
}

std::vector<std::pair<std::size_t, double>> gamma_spectrum(
    const ModularityExpansion& me) {
  std::vector<std::pair<std::size_t, double>> out;
  out.reserve(me.order.size());
  for (auto i : me.order) out.emplace_back(i, std::fabs(me.gammas[i]));
  return out;
}

}  // namespace modspec
