#pragma once

#include <map>
#include <vector>

#include "cliquecover/collection.hpp"
#include "cliquecover/index_set.hpp"

namespace cliquecover {

// One cell of the gamma partition: the nodes lying in exactly the cliques
// indexed by J.
struct GammaCell {
  IndexSet J;
  std::vector<int> nodes;  // ascending node ids

  int gamma() const { return static_cast<int>(nodes.size()); }

  friend bool operator==(const GammaCell&, const GammaCell&) = default;
};

// Partition of the node set by the exact set of cliques containing each
// node. Only non-empty cells are materialized, in canonical order
// (cardinality of J, then bit pattern); gamma lookups for absent cells
// return 0. Immutable after construction; all queries are pure and safe
// for concurrent reads.
class GammaPartition {
 public:
  // Single pass assigning each node x to the cell of J_x = {j : x in c_j}.
  static GammaPartition build(const CliqueCollection& c,
                              int max_cliques = kDefaultMaxCliques);

  // Assemble from explicit cells (validated: disjoint, covering 0..n-1,
  // non-empty index sets). Lets alternative constructions, such as the
  // brute-force 2^m intersection evaluation, produce comparable objects.
  static GammaPartition from_cells(int m, std::vector<GammaCell> cells);

  int clique_count() const { return m_; }  // m
  int node_count() const { return n_; }    // n

  const std::vector<GammaCell>& cells() const { return cells_; }
  std::vector<IndexSet> support() const;  // Js of non-empty cells, canonical

  IndexSet cell_of(int node) const;
  int gamma(IndexSet J) const;                 // 0 when the cell is absent
  const GammaCell* find_cell(IndexSet J) const;  // nullptr when absent

  // Degree in the graph union of every vertex of cell J: the sum of gamma
  // over all cells intersecting J, minus one. Throws when the cell is empty.
  int cell_degree(IndexSet J) const;

  // u ~ v iff their index sets intersect. Throws when u == v.
  bool adjacent(int u, int v) const;

 private:
  GammaPartition() = default;

  int m_ = 0;
  int n_ = 0;
  std::vector<GammaCell> cells_;          // canonical order, non-empty only
  std::map<IndexSet, int> cell_index_;    // J -> position in cells_
  std::vector<IndexSet> cell_of_;         // node -> J
};

// Executable witness that within-cell permutations are automorphisms of the
// graph union. perm maps node -> image and must permute nodes within cells
// only (anything else throws); returns whether perm preserves adjacency.
bool check_orbit_automorphism(const GammaPartition& p, const GraphUnion& g,
                              const std::vector<int>& perm);

}  // namespace cliquecover
