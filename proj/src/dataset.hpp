#pragma once

// Dataset ingestion and the similarity-graph construction: column
// normalization, Gaussian similarity, mean-threshold binarization.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dense.hpp"
#include "eigen_core.hpp"
#include "graph_matrices.hpp"
#include "partitioning.hpp"

namespace modspec {

struct DatasetTable {
  std::string name;
  DenseMatrix features;                  // rows x variables
  std::vector<std::string> truth_labels;
  std::vector<std::string> class_names;  // exactly two; the first maps to label 1
  std::vector<std::string> feature_names;
  std::size_t missing_values = 0;
  std::vector<std::string> warnings;

  std::size_t rows() const noexcept { return features.rows(); }
  Partition truth() const;
};

// Comma-separated file, optional header row, one label column. Empty cells in
// feature columns are missing and become 0. When `classes` is given only rows
// with those labels are kept (in file order) and the class order follows
// `classes`; otherwise the file must hold exactly two classes, ordered by first
// appearance. Throws InvalidInput with the offending line number.
DatasetTable load_csv(const std::filesystem::path& path, std::size_t label_col,
                      const std::optional<std::vector<std::string>>& classes = {});

// Each column divided by its 2-norm. Throws Degenerate naming the first
// all-zero column.
DatasetTable normalize_columns(DatasetTable t);

// S_ij = exp(−||x_i − x_j||² / (2 sigma²)).
SymmetricMatrix gaussian_similarity(const DatasetTable& t, double sigma);

// Mean of the n(n−1) off-diagonal entries.
double similarity_threshold(const SymmetricMatrix& s);

// A_ij = 1 iff i != j and S_ij >= mean off-diagonal similarity.
AdjacencyMatrix threshold_adjacency(const SymmetricMatrix& s);

// Plain "u v" edge list, 0-indexed, one edge per line; blank lines and lines
// starting with '#' are ignored. Node count is max index + 1 unless
// `node_count` is larger.
AdjacencyMatrix load_edge_list(const std::filesystem::path& path,
                               std::size_t node_count = 0);

// One label per line (blank lines ignored).
std::vector<std::string> load_labels(const std::filesystem::path& path);

// Two-class labels to a Partition; the first of `class_names` maps to 1.
Partition labels_to_partition(const std::vector<std::string>& labels,
                              const std::vector<std::string>& class_names);

}  // namespace modspec
