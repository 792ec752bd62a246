#include "metrics.hpp"

#include "error.hpp"

namespace modspec {

CsrReport csr(const Partition& p1, const Partition& p2) {
  if (p1.size() != p2.size())
    throw Error(ErrorKind::InvalidInput, "CSR needs partitions of equal length");
  if (p1.size() == 0)
    throw Error(ErrorKind::InvalidInput, "CSR of empty partitions");
  std::size_t same = 0;
  for (std::size_t i = 0; i < p1.size(); ++i) same += p1.labels[i] == p2.labels[i];
  const std::size_t total = p1.size();
  CsrReport r;
  r.total = total;
  if (same >= total - same) {
    r.agree_count = same;
    r.best_label_map = LabelMap::Identity;
  } else {
    r.agree_count = total - same;
    r.best_label_map = LabelMap::Swapped;
  }
  r.value = 100.0 * static_cast<double>(r.agree_count) / static_cast<double>(total);
  return r;
}

CsrReport accuracy(const Partition& p, const Partition& truth) {
  if (truth.trivial)
    throw Error(ErrorKind::InvalidInput, "ground truth must contain two classes");
  return csr(p, truth);
}

}  // namespace modspec
