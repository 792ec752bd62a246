#pragma once

#include <cstddef>

#include "partitioning.hpp"

namespace modspec {

enum class LabelMap { Identity, Swapped };

struct CsrReport {
  double value = 0.0;  // percentage in [0, 100]
  LabelMap best_label_map = LabelMap::Identity;
  std::size_t agree_count = 0;
  std::size_t total = 0;
};

// Clustering synchronization rate: the larger of the two agreement
// percentages obtained by identifying label 1 with label 1 or with label 0.
// Throws InvalidInput on length mismatch or empty partitions.
CsrReport csr(const Partition& p1, const Partition& p2);

// CSR against ground truth; `truth` must use both labels.
CsrReport accuracy(const Partition& p, const Partition& truth);

}  // namespace modspec
