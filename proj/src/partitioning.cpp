#include "partitioning.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace modspec {

std::string MethodId::name() const {
  switch (method) {
    case Method::UnnormalizedSpectral: return "L";
    case Method::Modularity: return "B";
    case Method::NormalizedSpectral: return "L_sym";
    case Method::NormalizedModularity: return "B_sym";
    case Method::NormalizedAdjacency: return "A_sym";
    case Method::AdjacencyApprox: return "A_" + std::to_string(p);
    case Method::GroundTruth: return "truth";
  }
  return "?";
}

Partition make_partition(std::vector<std::uint8_t> labels, MethodId method) {
  if (labels.empty())
    throw Error(ErrorKind::InvalidInput, "partition must not be empty");
  for (auto l : labels)
    if (l > 1) throw Error(ErrorKind::InvalidInput, "partition labels must be 0 or 1");
  Partition p;
  p.trivial = true;
  for (auto l : labels) p.trivial = p.trivial && l == labels.front();
  p.labels = std::move(labels);
  p.method = method;
  return p;
}

Partition sign_partition(std::span<const double> x, double tol, MethodId method) {
  std::vector<std::uint8_t> labels(x.size());
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > tol) {
      labels[i] = 1;
    } else if (x[i] < -tol) {
      labels[i] = 0;
    } else {
      labels[i] = 1;
      ++zeros;
    }
  }
  if (x.empty() || zeros == x.size())
    throw Error(ErrorKind::Degenerate,
                "cannot partition by signs: every entry is within tolerance of zero");
  Partition p = make_partition(std::move(labels), method);
  p.zero_entries = zeros;
  if (zeros > 0) {
    std::ostringstream msg;
    msg << method.name() << ": " << zeros
        << " eigenvector entr" << (zeros == 1 ? "y" : "ies")
        << " within tolerance of zero assigned to cluster 1";
    p.warnings.push_back(msg.str());
  }
  return p;
}

Partition trivial_partition(std::size_t n, MethodId method) {
  return make_partition(std::vector<std::uint8_t>(n, 1), method);
}

Partition fiedler_partition(const GraphMatrices& gm, double tol) {
  const EigenDecomposition eig = eig_sym(gm.lap);
  const std::size_t n = eig.size();
  const Vector fiedler = eig.vector(n - 2);
  Partition p = sign_partition(fiedler, tol, {Method::UnnormalizedSpectral});
  if (eig.eigenvalues[n - 2] <= kTrivialTolerance) {
    std::ostringstream msg;
    msg << "L: Fiedler value " << eig.eigenvalues[n - 2]
        << " is near zero; graph is nearly disconnected";
    p.warnings.push_back(msg.str());
  }
  return p;
}

Partition modularity_partition(const GraphMatrices& gm, double tol) {
  const EigenDecomposition eig = eig_sym(gm.mod);
  if (eig.eigenvalues[0] <= kTrivialTolerance)
    return trivial_partition(gm.size(), {Method::Modularity});
  return sign_partition(eig.vector(0), tol, {Method::Modularity});
}

namespace {

bool same_bipartition(const Partition& a, const Partition& b) {
  bool same = true, complement = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && a.labels[i] == b.labels[i];
    complement = complement && a.labels[i] != b.labels[i];
  }
  return same || complement;
}

}  // namespace

NormalizedPartitions normalized_partitions(const GraphMatrices& gm, double tol) {
  const std::size_t n = gm.size();
  const EigenDecomposition lap = eig_sym(gm.lap_sym);
  const EigenDecomposition mod = eig_sym(gm.mod_sym);
  const EigenDecomposition adj = eig_sym(gm.a_sym);

  NormalizedPartitions out;
  out.lap_sym = sign_partition(lap.vector(n - 2), tol, {Method::NormalizedSpectral});
  out.a_sym = sign_partition(adj.vector(1), tol, {Method::NormalizedAdjacency});
  out.mod_sym_beta1 = mod.eigenvalues[0];
  out.mod_sym = out.mod_sym_beta1 <= kTrivialTolerance
                    ? trivial_partition(n, {Method::NormalizedModularity})
                    : sign_partition(mod.vector(0), tol,
                                     {Method::NormalizedModularity});

  std::size_t zero_count = 0;
  double zero_gap = INFINITY;
  for (double v : mod.eigenvalues) {
    if (std::fabs(v) <= kSimplicityTolerance)
      ++zero_count;
    else
      zero_gap = std::fmin(zero_gap, std::fabs(v));
  }
  const double one_gap = adj.eigenvalues[0] - adj.eigenvalues[1];
  out.assumptions_hold = zero_count == 1 && one_gap > kSimplicityTolerance;
  if (zero_count != 1) {
    std::ostringstream msg;
    msg << "B_sym: zero eigenvalue has multiplicity " << zero_count
        << " (nearest nonzero eigenvalue " << zero_gap
        << "); equivalence check skipped";
    out.warnings.push_back(msg.str());
  }
  if (one_gap <= kSimplicityTolerance) {
    std::ostringstream msg;
    msg << "A_sym: eigenvalue one is not simple (gap " << one_gap
        << "); equivalence check skipped";
    out.warnings.push_back(msg.str());
  }
  if (out.assumptions_hold && out.mod_sym_beta1 > kTrivialTolerance) {
    out.equivalent = same_bipartition(out.mod_sym, out.a_sym);
    if (!*out.equivalent)
      out.warnings.push_back(
          "B_sym and A_sym bipartitions differ although the simplicity "
          "assumptions hold");
  }
  for (const Partition* p : {&out.lap_sym, &out.mod_sym, &out.a_sym})
    out.warnings.insert(out.warnings.end(), p->warnings.begin(), p->warnings.end());
  return out;
}

Partition approx_partition(const ModularityExpansion& me,
                           const EigenDecomposition& eig_a, std::size_t p,
                           double tol) {
  const ApproximationResult r = approximate(me, eig_a, p);
  return sign_partition(r.v, tol, {Method::AdjacencyApprox, p});
}

Partition approx_partition(const GraphMatrices& gm,
                           const EigenDecomposition& eig_a, std::size_t p,
                           double tol) {
  return approx_partition(expand_modularity(gm, eig_a), eig_a, p, tol);
}

}  // namespace modspec
