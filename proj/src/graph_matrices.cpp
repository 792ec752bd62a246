#include "graph_matrices.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>

#include "error.hpp"
#include "random.hpp"

namespace modspec {

AdjacencyMatrix::AdjacencyMatrix(std::size_t n, std::vector<std::uint8_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_)
    throw Error(ErrorKind::InvalidInput, "adjacency entries must be n*n");
  for (std::size_t i = 0; i < n_; ++i) {
    if (entries_[i * n_ + i] != 0)
      throw Error(ErrorKind::InvalidInput,
                  "adjacency diagonal must be zero (node " + std::to_string(i) + ")");
    for (std::size_t j = 0; j < n_; ++j) {
      const auto v = entries_[i * n_ + j];
      if (v > 1)
        throw Error(ErrorKind::InvalidInput, "adjacency entries must be 0 or 1");
      if (v != entries_[j * n_ + i])
        throw Error(ErrorKind::InvalidInput, "adjacency matrix is not symmetric");
    }
  }
}

AdjacencyMatrix AdjacencyMatrix::from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::uint8_t> e(n * n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    if (u == v)
      throw Error(ErrorKind::InvalidInput,
                  "self-loop on node " + std::to_string(u));
    e[u * n + v] = e[v * n + u] = 1;
  }
  return AdjacencyMatrix(n, std::move(e));
}

std::int64_t AdjacencyMatrix::degree(std::size_t i) const {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < n_; ++j) d += entries_[j * n_ + i];
  return d;
}

std::int64_t AdjacencyMatrix::edge_count() const {
  std::int64_t total = 0;
  for (auto v : entries_) total += v;
  return total / 2;
}

AdjacencyMatrix AdjacencyMatrix::induced(const std::vector<std::size_t>& nodes) const {
  const std::size_t k = nodes.size();
  std::vector<std::uint8_t> e(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) e[i * k + j] = (*this)(nodes[i], nodes[j]);
  return AdjacencyMatrix(k, std::move(e));
}

std::vector<std::size_t> ComponentLabeling::sizes() const {
  std::vector<std::size_t> s(count, 0);
  for (auto l : labels) ++s[l];
  return s;
}

std::vector<std::size_t> ComponentLabeling::largest() const {
  const auto s = sizes();
  if (s.empty()) return {};
  const auto best = static_cast<std::size_t>(
      std::max_element(s.begin(), s.end()) - s.begin());
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == best) nodes.push_back(i);
  return nodes;
}

ComponentLabeling check_connected(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  ComponentLabeling out;
  out.labels.assign(n, kUnset);
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (out.labels[s] != kUnset) continue;
    out.labels[s] = out.count;
    queue.push_back(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (a(u, v) && out.labels[v] == kUnset) {
          out.labels[v] = out.count;
          queue.push_back(v);
        }
      }
    }
    ++out.count;
  }
  return out;
}

Vector GraphMatrices::degree_vector() const {
  return Vector(degrees.begin(), degrees.end());
}

DenseMatrix GraphMatrices::degree_matrix() const {
  DenseMatrix d(size(), size());
  for (std::size_t i = 0; i < size(); ++i) d(i, i) = static_cast<double>(degrees[i]);
  return d;
}

GraphMatrices build_matrices(const AdjacencyMatrix& a) {
  const std::size_t n = a.size();
  if (n < 2)
    throw Error(ErrorKind::InvalidInput, "graph needs at least 2 nodes");

  std::vector<std::int64_t> deg(n);
  std::int64_t two_m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = a.degree(i);
    if (deg[i] == 0)
      throw Error(ErrorKind::Degree,
                  "node " + std::to_string(i) + " is isolated; D^{-1/2} is undefined");
    two_m += deg[i];
  }

  const ComponentLabeling comps = check_connected(a);
  if (comps.count > 1) {
    auto sizes = comps.sizes();
    std::ostringstream msg;
    msg << "graph is disconnected: " << comps.count << " components of sizes";
    for (auto s : sizes) msg << ' ' << s;
    throw ConnectivityError(std::move(sizes), msg.str());
  }

  const double denom = static_cast<double>(two_m);
  Vector inv_sqrt(n), sqrt_d(n);
  for (std::size_t i = 0; i < n; ++i) {
    sqrt_d[i] = std::sqrt(static_cast<double>(deg[i]));
    inv_sqrt[i] = 1.0 / sqrt_d[i];
  }

  DenseMatrix adj(n, n), lap(n, n), mod(n, n), p(n, n), a_sym(n, n),
      lap_sym(n, n), mod_sym(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double aij = a(i, j) ? 1.0 : 0.0;
      // Products of integers below 2^53 are exact, so P is exactly symmetric.
      const double pij = static_cast<double>(deg[i] * deg[j]) / denom;
      const double scale = inv_sqrt[i] * inv_sqrt[j];
      adj(i, j) = aij;
      p(i, j) = pij;
      mod(i, j) = aij - pij;
      a_sym(i, j) = aij * scale;
      if (i == j) {
        lap(i, j) = static_cast<double>(deg[i]);
        lap_sym(i, j) = 1.0;
      } else {
        lap(i, j) = -aij;
        lap_sym(i, j) = -a_sym(i, j);
      }
      mod_sym(i, j) = mod(i, j) * scale;
    }
  }

  return GraphMatrices{
      a,
      std::move(deg),
      two_m / 2,
      SymmetricMatrix(std::move(adj)),
      SymmetricMatrix(std::move(lap)),
      SymmetricMatrix(std::move(mod)),
      SymmetricMatrix(std::move(p)),
      SymmetricMatrix(std::move(a_sym)),
      SymmetricMatrix(std::move(lap_sym)),
      SymmetricMatrix(std::move(mod_sym)),
      std::move(sqrt_d),
  };
}

namespace {

double max_abs_product(const SymmetricMatrix& m, std::span<const double> x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    worst = std::fmax(worst, std::fabs(dot(m.dense().row(i), x)));
  return worst;
}

}  // namespace

std::vector<InvariantViolation> check_invariants(const GraphMatrices& gm,
                                                 std::uint64_t seed) {
  const std::size_t n = gm.size();
  std::vector<InvariantViolation> out;
  auto check = [&](const char* name, double value, double tol) {
    if (!(value <= tol)) out.push_back({name, value, tol});
  };

  const Vector ones(n, 1.0);
  check("B e = 0", max_abs_product(gm.mod, ones), 1e-12);
  check("L e = 0", max_abs_product(gm.lap, ones), 1e-12);
  check("B_sym D^{1/2} e = 0", max_abs_product(gm.mod_sym, gm.sqrt_d_e), 1e-12);
  check("L_sym D^{1/2} e = 0", max_abs_product(gm.lap_sym, gm.sqrt_d_e), 1e-12);

  double sym_gap = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sym_gap = std::fmax(sym_gap, std::fabs(gm.lap_sym(i, j) -
                                             ((i == j ? 1.0 : 0.0) - gm.a_sym(i, j))));
  check("L_sym = I - A_sym", sym_gap, 1e-14);

  // rank(P) = 1: with P_00 > 0, every minor through row 0 and column 0
  // vanishing forces every 2x2 minor to vanish.
  double minor = 0.0;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      minor = std::fmax(minor, std::fabs(gm.p(i, j) * gm.p(0, 0) -
                                         gm.p(i, 0) * gm.p(0, j)));
  check("rank(P) = 1", minor, 1e-12);

  Rng rng(seed);
  double worst = 0.0;
  for (int trial = 0; trial < 8; ++trial) {
    Vector x(n);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    const Vector lx = multiply(gm.lap.dense(), x);
    worst = std::fmin(worst, dot(x, lx));
  }
  check("x^T L x >= 0", -worst, 1e-10);

  if (gm.m * 2 != std::accumulate(gm.degrees.begin(), gm.degrees.end(), std::int64_t{0}))
    out.push_back({"sum d = 2m", 1.0, 0.0});
  return out;
}

}  // namespace modspec
