#include "dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace modspec {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  std::string out(s.substr(first, last - first + 1));
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"')
    out = out.substr(1, out.size() - 2);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string_view rest(line);
  while (true) {
    const auto comma = rest.find(',');
    cells.push_back(trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return cells;
}

std::optional<double> parse_number(const std::string& cell) {
  double v = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

[[noreturn]] void parse_error(const std::filesystem::path& path, std::size_t line,
                              const std::string& what) {
  std::ostringstream msg;
  msg << path.string() << ":" << line << ": " << what;
  throw Error(ErrorKind::InvalidInput, msg.str());
}

}  // namespace

Partition DatasetTable::truth() const {
  Partition p = labels_to_partition(truth_labels, class_names);
  p.method = {Method::GroundTruth};
  return p;
}

Partition labels_to_partition(const std::vector<std::string>& labels,
                              const std::vector<std::string>& class_names) {
  if (class_names.size() != 2)
    throw Error(ErrorKind::InvalidInput, "ground truth needs exactly two classes");
  std::vector<std::uint8_t> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == class_names[0])
      out[i] = 1;
    else if (labels[i] == class_names[1])
      out[i] = 0;
    else
      throw Error(ErrorKind::InvalidInput, "unknown class label '" + labels[i] + "'");
  }
  return make_partition(std::move(out), {Method::GroundTruth});
}

DatasetTable load_csv(const std::filesystem::path& path, std::size_t label_col,
                      const std::optional<std::vector<std::string>>& classes) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());

  DatasetTable t;
  t.name = path.stem().string();
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_csv(line);
    if (label_col >= cells.size())
      parse_error(path, line_no, "label column " + std::to_string(label_col) +
                                     " out of range (" + std::to_string(cells.size()) +
                                     " columns)");
    if (first) {
      first = false;
      width = cells.size();
      bool header = false;
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (c != label_col && !cells[c].empty() && !parse_number(cells[c])) header = true;
      if (header) {
        for (std::size_t c = 0; c < cells.size(); ++c)
          if (c != label_col) t.feature_names.push_back(cells[c]);
        continue;
      }
    }
    if (cells.size() != width)
      parse_error(path, line_no, "expected " + std::to_string(width) + " columns, found " +
                                     std::to_string(cells.size()));
    const std::string& label = cells[label_col];
    if (label.empty()) parse_error(path, line_no, "missing class label");
    if (classes && std::find(classes->begin(), classes->end(), label) == classes->end())
      continue;

    std::vector<double> values;
    values.reserve(width - 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_col) continue;
      if (cells[c].empty()) {
        values.push_back(0.0);
        ++t.missing_values;
        continue;
      }
      const auto v = parse_number(cells[c]);
      if (!v)
        parse_error(path, line_no, "column " + std::to_string(c) + ": '" + cells[c] +
                                       "' is not a finite number");
      values.push_back(*v);
    }
    rows.push_back(std::move(values));
    t.truth_labels.push_back(label);
  }

  if (rows.empty()) {
    if (first) throw Error(ErrorKind::InvalidInput, path.string() + ": file is empty");
    throw Error(ErrorKind::InvalidInput, path.string() + ": no data rows selected");
  }
  if (width < 2)
    throw Error(ErrorKind::InvalidInput, path.string() + ": no feature columns");

  std::vector<std::string> seen;
  for (const auto& l : t.truth_labels)
    if (std::find(seen.begin(), seen.end(), l) == seen.end()) seen.push_back(l);
  if (classes) {
    for (const auto& c : *classes)
      if (std::find(seen.begin(), seen.end(), c) != seen.end()) t.class_names.push_back(c);
  } else {
    t.class_names = seen;
  }
  if (t.class_names.size() < 2)
    throw Error(ErrorKind::InvalidInput,
                path.string() + ": fewer than 2 classes after filtering");
  if (t.class_names.size() > 2)
    throw Error(ErrorKind::InvalidInput,
                path.string() + ": " + std::to_string(t.class_names.size()) +
                    " classes present; select two with a class filter");

  t.features = DenseMatrix(rows.size(), width - 1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    std::copy(rows[r].begin(), rows[r].end(), t.features.row(r).begin());
  if (t.missing_values > 0)
    t.warnings.push_back(std::to_string(t.missing_values) +
                         " missing feature value(s) replaced by 0");
  return t;
}

DatasetTable normalize_columns(DatasetTable t) {
  const std::size_t rows = t.features.rows();
  for (std::size_t c = 0; c < t.features.cols(); ++c) {
    const double nrm = norm2(t.features.col(c));
    if (nrm == 0.0) {
      const std::string label =
          c < t.feature_names.size() ? t.feature_names[c] : "#" + std::to_string(c);
      throw Error(ErrorKind::Degenerate,
                  "feature column " + label + " has zero 2-norm");
    }
    for (std::size_t r = 0; r < rows; ++r) t.features(r, c) /= nrm;
  }
  return t;
}

SymmetricMatrix gaussian_similarity(const DatasetTable& t, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw Error(ErrorKind::InvalidInput, "sigma must be positive");
  const std::size_t n = t.rows();
  const double denom = 2.0 * sigma * sigma;
  DenseMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    s(i, i) = 1.0;
    const auto xi = t.features.row(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto xj = t.features.row(j);
      double dist = 0.0;
      for (std::size_t k = 0; k < xi.size(); ++k) {
        const double diff = xi[k] - xj[k];
        dist += diff * diff;
      }
      s(i, j) = s(j, i) = std::exp(-dist / denom);
    }
  }
  return SymmetricMatrix(std::move(s));
}

double similarity_threshold(const SymmetricMatrix& s) {
  const std::size_t n = s.size();
  if (n < 2) throw Error(ErrorKind::InvalidInput, "similarity matrix needs n >= 2");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += s(i, j);
  return sum / static_cast<double>(n * (n - 1));
}

AdjacencyMatrix threshold_adjacency(const SymmetricMatrix& s) {
  const double cut = similarity_threshold(s);
  const std::size_t n = s.size();
  std::vector<std::uint8_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && s(i, j) >= cut) e[i * n + j] = 1;
  return AdjacencyMatrix(n, std::move(e));
}

AdjacencyMatrix load_edge_list(const std::filesystem::path& path,
                               std::size_t node_count) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t n = node_count;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream ss(t);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra) || u < 0 || v < 0)
      parse_error(path, line_no, "expected two non-negative node indices");
    if (u == v) parse_error(path, line_no, "self-loop on node " + std::to_string(u));
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (edges.empty()) throw Error(ErrorKind::InvalidInput, path.string() + ": no edges");
  return AdjacencyMatrix::from_edges(n, edges);
}

std::vector<std::string> load_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (!t.empty()) labels.push_back(t);
  }
  return labels;
}

}  // namespace modspec
