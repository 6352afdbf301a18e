#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliquecover/index_set.hpp"

namespace cliquecover {

// The gamma partition indexes up to 2^m cells, so m beyond this cap is
// rejected unless the caller raises the cap explicitly.
inline constexpr int kDefaultMaxCliques = 20;

enum class InputFormat { kLines, kJson };

// An ordered collection of cliques over interned node labels.
//
// Node labels are opaque strings mapped to dense 0-based ids in
// first-appearance order; n is defined as the size of the union of all
// cliques, so every node belongs to at least one clique. Duplicate cliques
// (equal as node sets) are accepted but flagged. Immutable once built.
class CliqueCollection {
 public:
  static CliqueCollection from_label_cliques(
      const std::vector<std::vector<std::string>>& cliques);
  static CliqueCollection load(std::istream& in, InputFormat format);
  static CliqueCollection load_lines(std::istream& in);
  static CliqueCollection load_json(std::istream& in);

  int clique_count() const { return static_cast<int>(cliques_.size()); }  // m
  int node_count() const { return static_cast<int>(labels_.size()); }     // n

  // Node ids of clique j, ascending.
  const std::vector<int>& clique(int j) const;
  const std::vector<std::vector<int>>& cliques() const { return cliques_; }

  const std::string& label(int node) const;
  const std::vector<std::string>& labels() const { return labels_; }
  int node_id(const std::string& label) const;  // throws on unknown label
  std::vector<int> node_ids(const std::vector<std::string>& labels) const;

  bool has_duplicate_cliques() const { return has_duplicates_; }

  // Byte-stable: cliques in input order, labels in first-appearance order.
  std::string serialize_lines() const;
  std::string serialize_json() const;

 private:
  std::vector<std::vector<int>> cliques_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> label_to_id_;
  bool has_duplicates_ = false;
};

// The union graph of a clique collection: u ~ v iff some clique contains
// both. No self-loops. Immutable once built.
class GraphUnion {
 public:
  static GraphUnion from_collection(const CliqueCollection& c);

  int node_count() const { return n_; }
  bool adjacent(int u, int v) const;  // false when u == v
  int degree(int u) const;
  long long edge_count() const;

 private:
  int n_ = 0;
  std::vector<std::vector<bool>> adj_;
};

// Result of checking the three r-uniformity conditions on a collection:
// the cell cardinalities must sum to n, each clique's cells must sum to r,
// and every pair of cliques must share strictly fewer than r nodes
// (otherwise two cliques coincide).
struct ValidityReport {
  int r = 0;
  bool node_total_ok = false;
  bool clique_size_ok = false;
  bool pair_distinct_ok = false;
  std::vector<int> bad_cliques;                // 0-based clique indices
  std::vector<std::pair<int, int>> bad_pairs;  // 0-based, first < second

  bool all_ok() const { return node_total_ok && clique_size_ok && pair_distinct_ok; }
};

ValidityReport validate_r_collection(const CliqueCollection& c, int r,
                                     int max_cliques = kDefaultMaxCliques);

// True iff all cliques indexed by I are equal as node sets, decided by the
// cell-cardinality criterion: sum of gamma_J over J >= I equals r.
bool is_single_clique(const CliqueCollection& c, IndexSet I, int r,
                      int max_cliques = kDefaultMaxCliques);

}  // namespace cliquecover
