#pragma once

// End-to-end experiment: similarity graph, all partitioning methods,
// accuracy against ground truth, agreement with B, and the γ spectrum.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "graph_matrices.hpp"

namespace modspec {

struct SimilarityConfig {
  double sigma = 0.1;
  bool normalize_columns = true;
  std::string threshold_mode = "mean-off-diagonal";
  double zero_tol = kSignTolerance;
};

struct MethodResult {
  std::string name;
  bool ok = false;
  std::string error;
  std::string error_kind;
  std::optional<double> accuracy;  // percentage, when truth is known
  std::optional<double> csr_vs_b;  // A_p methods only
  std::optional<double> e_rel;     // A_p methods only
  bool trivial = false;
  std::size_t zero_entries = 0;
};

struct ExperimentReport {
  std::string name;
  // config echo
  std::optional<SimilarityConfig> similarity;  // absent for direct graph input
  std::vector<std::size_t> p_values;
  std::vector<std::string> classes;
  // input
  std::size_t input_rows = 0;
  std::size_t features = 0;
  std::size_t missing_values = 0;
  std::optional<double> similarity_cutoff;
  // graph
  std::size_t nodes = 0;  // retained nodes
  std::int64_t edges = 0;
  std::size_t components = 0;
  std::vector<std::size_t> component_sizes;
  // results
  std::vector<MethodResult> methods;
  bool expansion_ok = false;
  double beta1 = 0.0, sigma1 = 0.0, sigma2 = 0.0, delta = 0.0, q = 0.0;
  double coefficient_scale = 0.0;
  std::vector<double> gamma_top4;
  std::vector<double> gamma_top4_unscaled;
  std::optional<double> full_reconstruction_csr;
  std::optional<bool> normalized_assumptions_hold;
  std::optional<double> b_sym_beta1;
  std::optional<double> csr_b_sym_a_sym;
  std::vector<std::string> warnings;

  const MethodResult* method(const std::string& name) const;
  bool all_methods_failed() const;
};

ExperimentReport run_experiment(const DatasetTable& t, const SimilarityConfig& cfg,
                                const std::vector<std::size_t>& p_values);

// Direct graph input; `truth` (one label per node, two classes) is optional.
ExperimentReport run_graph_experiment(const std::string& name, const AdjacencyMatrix& a,
                                      const std::optional<std::vector<std::string>>& truth,
                                      const std::vector<std::size_t>& p_values,
                                      double zero_tol = kSignTolerance);

std::string report_json(const ExperimentReport& r);
std::string report_markdown(const ExperimentReport& r);

// Writes <dir>/report.json and <dir>/tables.md, creating `dir` if needed.
void write_report(const ExperimentReport& r, const std::filesystem::path& dir);

}  // namespace modspec
