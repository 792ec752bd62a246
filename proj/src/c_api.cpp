#include "modspec.h"

#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "dataset.hpp"
#include "eigen_core.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "metrics.hpp"
#include "modularity_spectral.hpp"
#include "properties.hpp"

struct ms_dataset {
  modspec::DatasetTable table;
};

struct ms_graph {
  std::string name;
  modspec::AdjacencyMatrix adjacency;
  std::optional<std::vector<std::string>> truth;
};

struct ms_report {
  modspec::ExperimentReport report;
  std::string json;
};

namespace {

thread_local std::string last_error;

ms_status status_for(modspec::ErrorKind kind) {
  using modspec::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::Connectivity:
    case ErrorKind::Degree:
    case ErrorKind::Degenerate:
      return MS_ERR_INPUT;
    case ErrorKind::Pole:
    case ErrorKind::Numeric:
      return MS_ERR_NUMERIC;
    case ErrorKind::Assumption:
      return MS_ERR_ASSUMPTION;
  }
  return MS_ERR_INTERNAL;
}

template <typename F>
ms_status guarded(F&& body) {
  try {
    body();
    return MS_OK;
  } catch (const modspec::Error& e) {
    last_error = std::string(modspec::to_string(e.kind())) + ": " + e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MS_ERR_INTERNAL;
  }
}

ms_status null_argument(const char* what) {
  last_error = std::string("invalid-input: ") + what + " is NULL";
  return MS_ERR_INPUT;
}

std::vector<std::size_t> to_vector(const size_t* values, size_t count) {
  return values ? std::vector<std::size_t>(values, values + count)
                : std::vector<std::size_t>{};
}

const modspec::MethodResult* find_method(const ms_report* r, const char* name) {
  if (!r || !name) return nullptr;
  const auto* m = r->report.method(name);
  return m && m->ok ? m : nullptr;
}

}  // namespace

extern "C" {

const char* ms_version(void) { return "1.0.0"; }

const char* ms_last_error(void) { return last_error.c_str(); }

ms_similarity_config ms_default_similarity_config(void) {
  const modspec::SimilarityConfig d;
  return {d.sigma, d.normalize_columns ? 1 : 0, d.zero_tol};
}

ms_status ms_dataset_load_csv(const char* path, size_t label_col,
                              const char* const* classes, size_t class_count,
                              ms_dataset** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::optional<std::vector<std::string>> filter;
    if (classes) filter = std::vector<std::string>(classes, classes + class_count);
    *out = new ms_dataset{modspec::load_csv(path, label_col, filter)};
  });
}

size_t ms_dataset_rows(const ms_dataset* d) { return d ? d->table.rows() : 0; }
size_t ms_dataset_features(const ms_dataset* d) {
  return d ? d->table.features.cols() : 0;
}
size_t ms_dataset_missing_values(const ms_dataset* d) {
  return d ? d->table.missing_values : 0;
}
void ms_dataset_free(ms_dataset* d) { delete d; }

ms_status ms_graph_load_edge_list(const char* path, const char* truth_path,
                                  ms_graph** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto a = modspec::load_edge_list(path);
    std::optional<std::vector<std::string>> truth;
    if (truth_path) truth = modspec::load_labels(truth_path);
    *out = new ms_graph{std::filesystem::path(path).stem().string(), std::move(a),
                        std::move(truth)};
  });
}

ms_status ms_graph_from_adjacency(size_t n, const uint8_t* entries, ms_graph** out) {
  if (!entries) return null_argument("entries");
  if (!out) return null_argument("out");
  return guarded([&] {
    modspec::AdjacencyMatrix a(n, std::vector<std::uint8_t>(entries, entries + n * n));
    *out = new ms_graph{"graph", std::move(a), std::nullopt};
  });
}

size_t ms_graph_nodes(const ms_graph* g) { return g ? g->adjacency.size() : 0; }
size_t ms_graph_edges(const ms_graph* g) {
  return g ? static_cast<size_t>(g->adjacency.edge_count()) : 0;
}
void ms_graph_free(ms_graph* g) { delete g; }

ms_status ms_run_dataset(const ms_dataset* dataset, const ms_similarity_config* config,
                         const size_t* p_values, size_t p_count, ms_report** out) {
  if (!dataset) return null_argument("dataset");
  if (!out) return null_argument("out");
  return guarded([&] {
    modspec::SimilarityConfig cfg;
    if (config) {
      cfg.sigma = config->sigma;
      cfg.normalize_columns = config->normalize_columns != 0;
      cfg.zero_tol = config->zero_tol;
    }
    auto r = modspec::run_experiment(dataset->table, cfg, to_vector(p_values, p_count));
    auto json = modspec::report_json(r);
    *out = new ms_report{std::move(r), std::move(json)};
  });
}

ms_status ms_run_graph(const ms_graph* graph, const size_t* p_values, size_t p_count,
                       ms_report** out) {
  if (!graph) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto r = modspec::run_graph_experiment(graph->name, graph->adjacency, graph->truth,
                                           to_vector(p_values, p_count));
    auto json = modspec::report_json(r);
    *out = new ms_report{std::move(r), std::move(json)};
  });
}

ms_status ms_report_write(const ms_report* report, const char* dir) {
  if (!report) return null_argument("report");
  if (!dir) return null_argument("dir");
  return guarded([&] { modspec::write_report(report->report, dir); });
}

size_t ms_report_json(const ms_report* report, char* buffer, size_t capacity) {
  if (!report) return 0;
  const std::string& j = report->json;
  if (buffer && capacity > 0) {
    const size_t n = std::min(capacity - 1, j.size());
    std::memcpy(buffer, j.data(), n);
    buffer[n] = '\0';
  }
  return j.size();
}

int ms_report_all_methods_failed(const ms_report* report) {
  return report && report->report.all_methods_failed() ? 1 : 0;
}

ms_status ms_report_accuracy(const ms_report* report, const char* method, double* out) {
  if (!out) return null_argument("out");
  const auto* m = find_method(report, method);
  if (!m || !m->accuracy) {
    last_error = "invalid-input: no accuracy for method";
    return MS_ERR_INPUT;
  }
  *out = *m->accuracy;
  return MS_OK;
}

ms_status ms_report_csr_vs_b(const ms_report* report, const char* method, double* out) {
  if (!out) return null_argument("out");
  const auto* m = find_method(report, method);
  if (!m || !m->csr_vs_b) {
    last_error = "invalid-input: no CSR against B for method";
    return MS_ERR_INPUT;
  }
  *out = *m->csr_vs_b;
  return MS_OK;
}

size_t ms_report_warning_count(const ms_report* report) {
  return report ? report->report.warnings.size() : 0;
}

void ms_report_free(ms_report* report) { delete report; }

ms_status ms_eig_sym(size_t n, const double* a, double* eigenvalues,
                     double* eigenvectors) {
  if (!a) return null_argument("a");
  if (!eigenvalues) return null_argument("eigenvalues");
  return guarded([&] {
    modspec::DenseMatrix m(n, n);
    std::copy(a, a + n * n, m.data().begin());
    const auto e = modspec::eig_sym(modspec::SymmetricMatrix(std::move(m)));
    std::copy(e.eigenvalues.begin(), e.eigenvalues.end(), eigenvalues);
    if (eigenvectors)
      std::copy(e.eigenvectors.data().begin(), e.eigenvectors.data().end(), eigenvectors);
  });
}

ms_status ms_dpr1_eigenvalues(size_t n, const double* d, double rho, const double* y,
                              double* roots) {
  if (!d) return null_argument("d");
  if (!y) return null_argument("y");
  if (!roots) return null_argument("roots");
  return guarded([&] {
    const modspec::Dpr1System sys(modspec::Vector(d, d + n), rho,
                                  modspec::Vector(y, y + n));
    const auto rep = modspec::dpr1_eigenvalues(sys);
    std::copy(rep.roots.begin(), rep.roots.end(), roots);
  });
}

ms_status ms_modularity_leading(const ms_graph* graph, double* vector, double* beta1,
                                double* gamma_magnitudes) {
  if (!graph) return null_argument("graph");
  if (!vector) return null_argument("vector");
  if (!beta1) return null_argument("beta1");
  return guarded([&] {
    const auto gm = modspec::build_matrices(graph->adjacency);
    const auto eig_a = modspec::eig_sym(gm.adj);
    const auto me = modspec::expand_modularity(gm, eig_a);
    const auto v = me.leading_eigenvector();
    std::copy(v.begin(), v.end(), vector);
    *beta1 = me.beta1;
    if (gamma_magnitudes) {
      const auto spectrum = modspec::gamma_spectrum(me);
      for (size_t j = 0; j < spectrum.size(); ++j) gamma_magnitudes[j] = spectrum[j].second;
    }
  });
}

ms_status ms_csr(size_t n, const uint8_t* labels1, const uint8_t* labels2, double* out) {
  if (!labels1) return null_argument("labels1");
  if (!labels2) return null_argument("labels2");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto p1 = modspec::make_partition({labels1, labels1 + n}, {});
    const auto p2 = modspec::make_partition({labels2, labels2 + n}, {});
    *out = modspec::csr(p1, p2).value;
  });
}

ms_status ms_selftest(uint64_t seed, size_t graphs, ms_selftest_sink sink, void* user,
                      size_t* failures) {
  return guarded([&] {
    modspec::PropertyOptions opts;
    opts.seed = seed;
    if (graphs > 0) opts.graphs = graphs;
    const auto results = modspec::run_property_suites(opts);
    size_t failed = 0;
    for (const auto& r : results) {
      failed += r.passed ? 0 : 1;
      if (!sink) continue;
      std::ostringstream line;
      line << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": checked " << r.checked
           << ", skipped " << r.skipped << ", worst " << r.worst << " (tol "
           << r.tolerance << ")";
      if (!r.detail.empty()) line << " - " << r.detail;
      sink(line.str().c_str(), r.passed ? 1 : 0, user);
    }
    if (failures) *failures = failed;
  });
}

}  // extern "C"
