/*
 * modspec: spectral graph bipartitioning through the modularity and
 * adjacency spectra.
 *
 * C interface. Objects are opaque handles created by the library and released
 * with the matching *_free function. Every fallible call returns an
 * ms_status; on failure ms_last_error() describes the problem for the calling
 * thread until its next failing call.
 */
#ifndef MODSPEC_H
#define MODSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MODSPEC_BUILDING)
#    define MODSPEC_API __declspec(dllexport)
#  else
#    define MODSPEC_API __declspec(dllimport)
#  endif
#else
#  define MODSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes for the CLI. */
typedef enum ms_status {
  MS_OK = 0,
  MS_ERR_INTERNAL = 1,
  MS_ERR_INPUT = 2,      /* bad arguments, unreadable or malformed input */
  MS_ERR_NUMERIC = 3,    /* non-convergence, pole evaluation */
  MS_ERR_ASSUMPTION = 4  /* method preconditions do not hold */
} ms_status;

typedef struct ms_dataset ms_dataset;
typedef struct ms_graph ms_graph;
typedef struct ms_report ms_report;

typedef struct ms_similarity_config {
  double sigma;          /* Gaussian width, > 0 */
  int normalize_columns; /* nonzero: divide each feature column by its 2-norm */
  double zero_tol;       /* eigenvector entries with |x| <= zero_tol are ties */
} ms_similarity_config;

MODSPEC_API const char* ms_version(void);
MODSPEC_API const char* ms_last_error(void);
MODSPEC_API ms_similarity_config ms_default_similarity_config(void);

/* ---- datasets and graphs ------------------------------------------------ */

/* `classes` may be NULL (file must then hold exactly two classes). */
MODSPEC_API ms_status ms_dataset_load_csv(const char* path, size_t label_col,
                                          const char* const* classes,
                                          size_t class_count, ms_dataset** out);
MODSPEC_API size_t ms_dataset_rows(const ms_dataset* dataset);
MODSPEC_API size_t ms_dataset_features(const ms_dataset* dataset);
MODSPEC_API size_t ms_dataset_missing_values(const ms_dataset* dataset);
MODSPEC_API void ms_dataset_free(ms_dataset* dataset);

/* Edge list "u v" per line, 0-indexed. `truth_path` may be NULL; otherwise
 * it holds one class label per node. */
MODSPEC_API ms_status ms_graph_load_edge_list(const char* path,
                                              const char* truth_path,
                                              ms_graph** out);
/* Dense row-major n*n 0/1 adjacency matrix. */
MODSPEC_API ms_status ms_graph_from_adjacency(size_t n, const uint8_t* entries,
                                              ms_graph** out);
MODSPEC_API size_t ms_graph_nodes(const ms_graph* graph);
MODSPEC_API size_t ms_graph_edges(const ms_graph* graph);
MODSPEC_API void ms_graph_free(ms_graph* graph);

/* ---- experiments ---------------------------------------------------------- */

MODSPEC_API ms_status ms_run_dataset(const ms_dataset* dataset,
                                     const ms_similarity_config* config,
                                     const size_t* p_values, size_t p_count,
                                     ms_report** out);
MODSPEC_API ms_status ms_run_graph(const ms_graph* graph, const size_t* p_values,
                                   size_t p_count, ms_report** out);

/* Writes <dir>/report.json and <dir>/tables.md. */
MODSPEC_API ms_status ms_report_write(const ms_report* report, const char* dir);
/* Copies the JSON report into `buffer` (NUL-terminated, truncated to
 * `capacity`) and returns the full length excluding the terminator. */
MODSPEC_API size_t ms_report_json(const ms_report* report, char* buffer,
                                  size_t capacity);
MODSPEC_API int ms_report_all_methods_failed(const ms_report* report);
/* Accuracy (percent) of a method such as "B" or "A_2"; returns MS_ERR_INPUT
 * when the method is unknown, failed, or no truth was supplied. */
MODSPEC_API ms_status ms_report_accuracy(const ms_report* report,
                                         const char* method, double* out);
MODSPEC_API ms_status ms_report_csr_vs_b(const ms_report* report,
                                         const char* method, double* out);
MODSPEC_API size_t ms_report_warning_count(const ms_report* report);
MODSPEC_API void ms_report_free(ms_report* report);

/* ---- numerical core ------------------------------------------------------- */

/* Symmetric eigendecomposition of the row-major n*n matrix `a`. Eigenvalues
 * are written descending; `eigenvectors` (may be NULL) receives the row-major
 * n*n matrix whose column i pairs with eigenvalue i. */
MODSPEC_API ms_status ms_eig_sym(size_t n, const double* a, double* eigenvalues,
                                 double* eigenvectors);

/* Eigenvalues of diag(d) + rho * y y^T, ascending. */
MODSPEC_API ms_status ms_dpr1_eigenvalues(size_t n, const double* d, double rho,
                                          const double* y, double* roots);

/* Leading eigenvector of the modularity matrix of a connected graph built
 * from the adjacency eigenbasis: writes the unit vector (n entries), the
 * largest modularity eigenvalue, and the |gamma| coefficients in truncation
 * order (n entries, may be NULL). */
MODSPEC_API ms_status ms_modularity_leading(const ms_graph* graph, double* vector,
                                            double* beta1, double* gamma_magnitudes);

/* Clustering synchronization rate (percent) of two 0/1 labelings. */
MODSPEC_API ms_status ms_csr(size_t n, const uint8_t* labels1,
                             const uint8_t* labels2, double* out);

/* ---- property suites ------------------------------------------------------ */

typedef void (*ms_selftest_sink)(const char* line, int passed, void* user);

/* Runs the randomized property suites; each suite reports one line to `sink`.
 * `failures` (may be NULL) receives the number of failing suites. */
MODSPEC_API ms_status ms_selftest(uint64_t seed, size_t graphs,
                                  ms_selftest_sink sink, void* user,
                                  size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* MODSPEC_H */
