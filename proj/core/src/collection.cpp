#include "cliquecover/collection.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cliquecover/partition.hpp"

namespace cliquecover {

namespace {

void check_clique_index(const CliqueCollection& c, int j) {
  if (j < 0 || j >= c.clique_count()) {
    throw std::out_of_range("clique index out of range");
  }
}

}  // namespace

CliqueCollection CliqueCollection::from_label_cliques(
    const std::vector<std::vector<std::string>>& cliques) {
  if (cliques.empty()) {
    throw std::invalid_argument("collection must contain at least one clique");
  }
  CliqueCollection c;
  for (std::size_t j = 0; j < cliques.size(); ++j) {
    if (cliques[j].empty()) {
      throw std::invalid_argument("clique " + std::to_string(j + 1) + " is empty");
    }
    std::vector<int> ids;
    for (const std::string& label : cliques[j]) {
      // labels must survive the lines format, where tokens are
      // whitespace-delimited and '#' opens a comment
      if (label.empty() ||
          label.find_first_of(" \t\r\n#") != std::string::npos) {
        throw std::invalid_argument("invalid node label: \"" + label + "\"");
      }
      auto [it, inserted] =
          c.label_to_id_.try_emplace(label, static_cast<int>(c.labels_.size()));
      if (inserted) c.labels_.push_back(label);
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    c.cliques_.push_back(std::move(ids));
  }
  std::set<std::vector<int>> distinct(c.cliques_.begin(), c.cliques_.end());
  c.has_duplicates_ = distinct.size() != c.cliques_.size();
  return c;
}

CliqueCollection CliqueCollection::load(std::istream& in, InputFormat format) {
  return format == InputFormat::kLines ? load_lines(in) : load_json(in);
}

CliqueCollection CliqueCollection::load_lines(std::istream& in) {
  std::vector<std::vector<std::string>> cliques;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    const bool had_comment = hash != std::string::npos;
    if (had_comment) line.resize(hash);

    std::istringstream tokens(line);
    std::vector<std::string> labels;
    std::string tok;
    while (tokens >> tok) labels.push_back(tok);

    if (labels.empty()) {
      if (had_comment) continue;  // comment-only line
      throw std::invalid_argument("empty clique at line " +
                                  std::to_string(line_number));
    }
    cliques.push_back(std::move(labels));
  }
  if (cliques.empty()) {
    throw std::invalid_argument("input contains no cliques");
  }
  return from_label_cliques(cliques);
}

CliqueCollection CliqueCollection::load_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON input: ") + e.what());
  }
  const nlohmann::json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("cliques")) {
      throw std::invalid_argument("JSON object input requires a \"cliques\" key");
    }
    arr = &doc["cliques"];
  }
  if (!arr->is_array()) {
    throw std::invalid_argument("JSON input must be an array of cliques");
  }
  std::vector<std::vector<std::string>> cliques;
  for (const auto& row : *arr) {
    if (!row.is_array()) {
      throw std::invalid_argument("each clique must be an array of labels");
    }
    std::vector<std::string> labels;
    for (const auto& cell : row) {
      if (cell.is_string()) {
        labels.push_back(cell.get<std::string>());
      } else if (cell.is_number_integer()) {
        labels.push_back(std::to_string(cell.get<long long>()));
      } else {
        throw std::invalid_argument("node labels must be strings or integers");
      }
    }
    if (labels.empty()) {
      throw std::invalid_argument("empty clique at index " +
                                  std::to_string(cliques.size() + 1));
    }
    cliques.push_back(std::move(labels));
  }
  if (cliques.empty()) {
    throw std::invalid_argument("input contains no cliques");
  }
  return from_label_cliques(cliques);
}

const std::vector<int>& CliqueCollection::clique(int j) const {
  check_clique_index(*this, j);
  return cliques_[static_cast<std::size_t>(j)];
}

const std::string& CliqueCollection::label(int node) const {
  if (node < 0 || node >= node_count()) {
    throw std::out_of_range("node id out of range");
  }
  return labels_[static_cast<std::size_t>(node)];
}

int CliqueCollection::node_id(const std::string& label) const {
  auto it = label_to_id_.find(label);
  if (it == label_to_id_.end()) {
    throw std::invalid_argument("unknown node label: " + label);
  }
  return it->second;
}

std::vector<int> CliqueCollection::node_ids(
    const std::vector<std::string>& labels) const {
  std::vector<int> ids;
  ids.reserve(labels.size());
  for (const auto& label : labels) ids.push_back(node_id(label));
  return ids;
}

std::string CliqueCollection::serialize_lines() const {
  std::string out;
  for (const auto& clique : cliques_) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (i > 0) out += ' ';
      out += labels_[static_cast<std::size_t>(clique[i])];
    }
    out += '\n';
  }
  return out;
}

std::string CliqueCollection::serialize_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& clique : cliques_) {
    nlohmann::json row = nlohmann::json::array();
    for (int id : clique) row.push_back(labels_[static_cast<std::size_t>(id)]);
    arr.push_back(std::move(row));
  }
  return nlohmann::json{{"cliques", std::move(arr)}}.dump();
}

GraphUnion GraphUnion::from_collection(const CliqueCollection& c) {
  GraphUnion g;
  g.n_ = c.node_count();
  g.adj_.assign(static_cast<std::size_t>(g.n_),
                std::vector<bool>(static_cast<std::size_t>(g.n_), false));
  for (const auto& clique : c.cliques()) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        g.adj_[static_cast<std::size_t>(clique[i])][static_cast<std::size_t>(clique[j])] = true;
        g.adj_[static_cast<std::size_t>(clique[j])][static_cast<std::size_t>(clique[i])] = true;
      }
    }
  }
  return g;
}

bool GraphUnion::adjacent(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw std::out_of_range("node id out of range");
  }
  return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

int GraphUnion::degree(int u) const {
  if (u < 0 || u >= n_) throw std::out_of_range("node id out of range");
  int d = 0;
  for (bool b : adj_[static_cast<std::size_t>(u)]) d += b;
  return d;
}

long long GraphUnion::edge_count() const {
  long long e = 0;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      e += adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }
  }
  return e;
}

ValidityReport validate_r_collection(const CliqueCollection& c, int r,
                                     int max_cliques) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  const GammaPartition p = GammaPartition::build(c, max_cliques);
  const int m = c.clique_count();

  ValidityReport report;
  report.r = r;

  long long total = 0;
  for (const auto& cell : p.cells()) total += cell.gamma();
  report.node_total_ok = total == c.node_count();

  report.clique_size_ok = true;
  for (int j = 0; j < m; ++j) {
    long long sum = 0;
    for (const auto& cell : p.cells()) {
      if (cell.J.contains(j)) sum += cell.gamma();
    }
    if (sum != r) {
      report.clique_size_ok = false;
      report.bad_cliques.push_back(j);
    }
  }

  report.pair_distinct_ok = true;
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      const IndexSet pair = IndexSet::single(j).with(k);
      long long sum = 0;
      for (const auto& cell : p.cells()) {
        if (pair.subset_of(cell.J)) sum += cell.gamma();
      }
      if (sum >= r) {
        report.pair_distinct_ok = false;
        report.bad_pairs.emplace_back(j, k);
      }
    }
  }
  return report;
}

bool is_single_clique(const CliqueCollection& c, IndexSet I, int r,
                      int max_cliques) {
  if (I.empty()) throw std::invalid_argument("index set must be non-empty");
  if (!I.subset_of(IndexSet::full(c.clique_count()))) {
    throw std::invalid_argument("index set out of range");
  }
  if (r < 1) throw std::invalid_argument("r must be positive");
  const GammaPartition p = GammaPartition::build(c, max_cliques);
  long long sum = 0;
  for (const auto& cell : p.cells()) {
    if (I.subset_of(cell.J)) sum += cell.gamma();
  }
  return sum == r;
}

}  // namespace cliquecover
