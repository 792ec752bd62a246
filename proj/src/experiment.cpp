#include "experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "metrics.hpp"
#include "modularity_spectral.hpp"
#include "partitioning.hpp"

namespace modspec {

const MethodResult* ExperimentReport::method(const std::string& name) const {
  for (const auto& m : methods)
    if (m.name == name) return &m;
  return nullptr;
}

bool ExperimentReport::all_methods_failed() const {
  return std::none_of(methods.begin(), methods.end(),
                      [](const MethodResult& m) { return m.ok; });
}

namespace {

MethodResult failed(const std::string& name, const std::exception& e) {
  MethodResult r;
  r.name = name;
  r.error = e.what();
  if (const auto* err = dynamic_cast<const Error*>(&e))
    r.error_kind = to_string(err->kind());
  else
    r.error_kind = "internal";
  return r;
}

MethodResult succeeded(const Partition& p, const std::optional<Partition>& truth) {
  MethodResult r;
  r.name = p.method.name();
  r.ok = true;
  r.trivial = p.trivial;
  r.zero_entries = p.zero_entries;
  if (truth) r.accuracy = accuracy(p, *truth).value;
  return r;
}

ExperimentReport run_on_graph(ExperimentReport report, const AdjacencyMatrix& full,
                              std::optional<std::vector<std::uint8_t>> truth_labels,
                              double zero_tol) {
  const ComponentLabeling comps = check_connected(full);
  report.components = comps.count;
  report.component_sizes = comps.sizes();

  AdjacencyMatrix a = full;
  if (comps.count > 1) {
    const auto keep = comps.largest();
    std::ostringstream msg;
    msg << "graph has " << comps.count << " components; restricted to the largest ("
        << keep.size() << " of " << full.size() << " nodes)";
    report.warnings.push_back(msg.str());
    a = full.induced(keep);
    if (truth_labels) {
      std::vector<std::uint8_t> kept;
      for (auto i : keep) kept.push_back((*truth_labels)[i]);
      truth_labels = std::move(kept);
    }
  }
  report.nodes = a.size();
  report.edges = a.edge_count();

  std::optional<Partition> truth;
  if (truth_labels) {
    truth = make_partition(*truth_labels, {Method::GroundTruth});
    if (truth->trivial) {
      report.warnings.push_back(
          "retained nodes hold a single ground-truth class; accuracy not reported");
      truth.reset();
    }
  }

  const GraphMatrices gm = build_matrices(a);
  auto collect = [&](const Partition& p) {
    report.warnings.insert(report.warnings.end(), p.warnings.begin(), p.warnings.end());
    report.methods.push_back(succeeded(p, truth));
  };

  try {
    collect(fiedler_partition(gm, zero_tol));
  } catch (const std::exception& e) {
    report.methods.push_back(failed("L", e));
  }

  std::optional<Partition> mod_partition;
  try {
    mod_partition = modularity_partition(gm, zero_tol);
    collect(*mod_partition);
  } catch (const std::exception& e) {
    report.methods.push_back(failed("B", e));
  }

  try {
    const NormalizedPartitions np = normalized_partitions(gm, zero_tol);
    report.methods.push_back(succeeded(np.lap_sym, truth));
    report.methods.push_back(succeeded(np.mod_sym, truth));
    report.methods.push_back(succeeded(np.a_sym, truth));
    report.warnings.insert(report.warnings.end(), np.warnings.begin(), np.warnings.end());
    report.normalized_assumptions_hold = np.assumptions_hold;
    report.b_sym_beta1 = np.mod_sym_beta1;
    report.csr_b_sym_a_sym = csr(np.mod_sym, np.a_sym).value;
  } catch (const std::exception& e) {
    for (const char* name : {"L_sym", "B_sym", "A_sym"})
      report.methods.push_back(failed(name, e));
  }

  try {
    const EigenDecomposition eig_a = eig_sym(gm.adj);
    const ModularityExpansion me = expand_modularity(gm, eig_a);
    report.expansion_ok = true;
    report.beta1 = me.beta1;
    report.sigma1 = me.sigma1;
    report.sigma2 = me.sigma2;
    report.delta = me.delta;
    report.q = me.q;
    report.coefficient_scale = me.coefficient_scale;
    const auto spectrum = gamma_spectrum(me);
    for (std::size_t j = 0; j < std::min<std::size_t>(4, spectrum.size()); ++j) {
      report.gamma_top4.push_back(spectrum[j].second);
      report.gamma_top4_unscaled.push_back(spectrum[j].second * me.coefficient_scale);
    }

    for (std::size_t p : report.p_values) {
      const std::string name = MethodId{Method::AdjacencyApprox, p}.name();
      try {
        const ApproximationResult ar = approximate(me, eig_a, p);
        const Partition part =
            sign_partition(ar.v, zero_tol, {Method::AdjacencyApprox, p});
        report.warnings.insert(report.warnings.end(), part.warnings.begin(),
                               part.warnings.end());
        MethodResult r = succeeded(part, truth);
        r.e_rel = ar.e_rel;
        if (mod_partition) r.csr_vs_b = csr(part, *mod_partition).value;
        report.methods.push_back(r);
      } catch (const std::exception& e) {
        report.methods.push_back(failed(name, e));
      }
    }
    if (mod_partition) {
      const ApproximationResult full_rec = approximate(me, eig_a, gm.size());
      const Partition part = sign_partition(full_rec.v, zero_tol,
                                            {Method::AdjacencyApprox, gm.size()});
      report.full_reconstruction_csr = csr(part, *mod_partition).value;
    }
  } catch (const std::exception& e) {
    report.warnings.push_back(std::string("modularity expansion failed: ") + e.what());
    for (std::size_t p : report.p_values)
      report.methods.push_back(failed(MethodId{Method::AdjacencyApprox, p}.name(), e));
  }
  return report;
}

}  // namespace

ExperimentReport run_experiment(const DatasetTable& t, const SimilarityConfig& cfg,
                                const std::vector<std::size_t>& p_values) {
  ExperimentReport report;
  report.name = t.name;
  report.similarity = cfg;
  report.p_values = p_values;
  report.classes = t.class_names;
  report.input_rows = t.rows();
  report.features = t.features.cols();
  report.missing_values = t.missing_values;
  report.warnings = t.warnings;

  const DatasetTable prepared = cfg.normalize_columns ? normalize_columns(t) : t;
  const SymmetricMatrix s = gaussian_similarity(prepared, cfg.sigma);
  report.similarity_cutoff = similarity_threshold(s);
  const AdjacencyMatrix a = threshold_adjacency(s);
  return run_on_graph(std::move(report), a, t.truth().labels, cfg.zero_tol);
}

ExperimentReport run_graph_experiment(const std::string& name, const AdjacencyMatrix& a,
                                      const std::optional<std::vector<std::string>>& truth,
                                      const std::vector<std::size_t>& p_values,
                                      double zero_tol) {
  ExperimentReport report;
  report.name = name;
  report.p_values = p_values;
  report.input_rows = a.size();
  std::optional<std::vector<std::uint8_t>> labels;
  if (truth) {
    if (truth->size() != a.size())
      throw Error(ErrorKind::InvalidInput,
                  "truth has " + std::to_string(truth->size()) + " labels for " +
                      std::to_string(a.size()) + " nodes");
    std::vector<std::string> seen;
    for (const auto& l : *truth)
      if (std::find(seen.begin(), seen.end(), l) == seen.end()) seen.push_back(l);
    if (seen.size() != 2)
      throw Error(ErrorKind::InvalidInput, "truth labels must contain exactly two classes");
    report.classes = seen;
    labels = labels_to_partition(*truth, seen).labels;
  }
  return run_on_graph(std::move(report), a, std::move(labels), zero_tol);
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json optional_number(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string percent(const std::optional<double>& v) {
  if (!v) return "-";
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << *v;
  return s.str();
}

std::string magnitude(double v) {
  std::ostringstream s;
  s << std::setprecision(v >= 1.0 ? 5 : 2) << v;
  return s.str();
}

}  // namespace

std::string report_json(const ExperimentReport& r) {
  ordered_json j;
  j["name"] = r.name;

  ordered_json cfg;
  if (r.similarity) {
    cfg["sigma"] = r.similarity->sigma;
    cfg["normalize_columns"] = r.similarity->normalize_columns;
    cfg["kernel"] = "exp(-||x_i - x_j||^2 / (2 sigma^2))";
    cfg["threshold_mode"] = r.similarity->threshold_mode;
    cfg["threshold_inclusive"] = true;
    cfg["zero_tol"] = r.similarity->zero_tol;
  } else {
    cfg["input"] = "edge-list";
  }
  cfg["p_values"] = r.p_values;
  cfg["classes"] = r.classes;
  j["config"] = cfg;

  j["input"] = {{"rows", r.input_rows},
                {"features", r.features},
                {"missing_values", r.missing_values},
                {"similarity_cutoff", optional_number(r.similarity_cutoff)}};
  j["graph"] = {{"nodes", r.nodes},
                {"edges", r.edges},
                {"components", r.components},
                {"component_sizes", r.component_sizes}};

  ordered_json acc = ordered_json::object();
  for (const auto& m : r.methods) acc[m.name] = optional_number(m.accuracy);
  j["table1"] = {{"data_points", r.nodes}, {"accuracy", acc}};

  ordered_json csr_b = ordered_json::object();
  for (const auto& m : r.methods)
    if (m.name.rfind("A_", 0) == 0 && m.name != "A_sym") csr_b[m.name] = optional_number(m.csr_vs_b);
  j["table2"] = {{"csr_vs_B", csr_b},
                 {"gamma_top4", r.gamma_top4},
                 {"gamma_top4_unscaled", r.gamma_top4_unscaled}};

  ordered_json methods = ordered_json::array();
  for (const auto& m : r.methods) {
    ordered_json e;
    e["name"] = m.name;
    e["status"] = m.ok ? "ok" : "failed";
    if (!m.ok) {
      e["error_kind"] = m.error_kind;
      e["error"] = m.error;
    }
    e["accuracy"] = optional_number(m.accuracy);
    e["trivial"] = m.trivial;
    e["zero_entries"] = m.zero_entries;
    if (m.csr_vs_b) e["csr_vs_B"] = *m.csr_vs_b;
    if (m.e_rel) e["e_rel"] = *m.e_rel;
    methods.push_back(e);
  }
  j["methods"] = methods;

  ordered_json ex;
  ex["ok"] = r.expansion_ok;
  if (r.expansion_ok) {
    ex["beta1"] = r.beta1;
    ex["sigma1"] = r.sigma1;
    ex["sigma2"] = r.sigma2;
    ex["delta"] = r.delta;
    ex["q"] = r.q;
    ex["coefficient_scale"] = r.coefficient_scale;
    ex["full_reconstruction_csr"] = optional_number(r.full_reconstruction_csr);
  }
  j["expansion"] = ex;

  ordered_json ne;
  ne["assumptions_hold"] = r.normalized_assumptions_hold
                               ? ordered_json(*r.normalized_assumptions_hold)
                               : ordered_json(nullptr);
  ne["b_sym_beta1"] = optional_number(r.b_sym_beta1);
  ne["csr_B_sym_A_sym"] = optional_number(r.csr_b_sym_a_sym);
  j["normalized_equivalence"] = ne;
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string report_markdown(const ExperimentReport& r) {
  std::ostringstream md;
  md << "# " << r.name << "\n\n";

  md << "## Accuracy (%)\n\n| Data | Number of data points |";
  for (const auto& m : r.methods) md << ' ' << m.name << " |";
  md << "\n|---|---|";
  for (std::size_t i = 0; i < r.methods.size(); ++i) md << "---|";
  md << "\n| " << r.name << " | " << r.nodes << " |";
  for (const auto& m : r.methods) md << ' ' << (m.ok ? percent(m.accuracy) : "failed") << " |";
  md << "\n\n";

  std::vector<const MethodResult*> approx;
  for (const auto& m : r.methods)
    if (m.name.rfind("A_", 0) == 0 && m.name != "A_sym") approx.push_back(&m);

  md << "## Agreement with B and coefficient magnitudes\n\n| Data |";
  for (const auto* m : approx) md << " CSR(" << m->name << ",B) |";
  for (std::size_t j = 1; j <= 4; ++j) md << " \\|gamma_i" << j << "\\| |";
  md << "\n|---|";
  for (std::size_t i = 0; i < approx.size() + 4; ++i) md << "---|";
  auto row = [&](const char* suffix, const std::vector<double>& gammas) {
    md << "\n| " << r.name << suffix << " |";
    for (const auto* m : approx) md << ' ' << percent(m->csr_vs_b) << " |";
    for (std::size_t j = 0; j < 4; ++j)
      md << ' ' << (j < gammas.size() ? magnitude(gammas[j]) : "-") << " |";
  };
  row("", r.gamma_top4);
  row(" (x \\|\\|U^T d\\|\\|)", r.gamma_top4_unscaled);
  md << "\n\n";

  if (!r.warnings.empty()) {
    md << "## Warnings\n\n";
    for (const auto& w : r.warnings) md << "- " << w << "\n";
  }
  return md.str();
}

void write_report(const ExperimentReport& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::InvalidInput, "cannot create " + dir.string());
  {
    std::ofstream out(dir / "report.json", std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write report.json");
    out << report_json(r);
  }
  std::ofstream out(dir / "tables.md", std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write tables.md");
  out << report_markdown(r);
}

}  // namespace modspec
