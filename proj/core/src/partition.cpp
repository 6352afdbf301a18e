#include "cliquecover/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cliquecover {

GammaPartition GammaPartition::build(const CliqueCollection& c, int max_cliques) {
  const int m = c.clique_count();
  if (m > max_cliques) {
    throw std::invalid_argument(
        "collection has " + std::to_string(m) + " cliques; the partition indexes up to 2^m cells, so m is capped at " +
        std::to_string(max_cliques) + " (raise the cap explicitly to proceed)");
  }
  if (m > IndexSet::kMaxWidth) {
    throw std::invalid_argument("collections beyond 64 cliques are unsupported");
  }

  const int n = c.node_count();
  std::vector<IndexSet> node_sets(static_cast<std::size_t>(n));
  for (int j = 0; j < m; ++j) {
    for (int x : c.clique(j)) {
      node_sets[static_cast<std::size_t>(x)] = node_sets[static_cast<std::size_t>(x)].with(j);
    }
  }

  std::map<IndexSet, std::vector<int>> grouped;
  for (int x = 0; x < n; ++x) grouped[node_sets[static_cast<std::size_t>(x)]].push_back(x);

  std::vector<GammaCell> cells;
  cells.reserve(grouped.size());
  for (auto& [J, nodes] : grouped) cells.push_back({J, std::move(nodes)});
  return from_cells(m, std::move(cells));
}

GammaPartition GammaPartition::from_cells(int m, std::vector<GammaCell> cells) {
  std::sort(cells.begin(), cells.end(),
            [](const GammaCell& a, const GammaCell& b) { return a.J < b.J; });

  GammaPartition p;
  p.m_ = m;
  int n = 0;
  for (auto& cell : cells) {
    if (cell.J.empty()) {
      throw std::invalid_argument("cell with empty index set");
    }
    if (!cell.J.subset_of(IndexSet::full(m))) {
      throw std::invalid_argument("cell index set exceeds the clique count");
    }
    if (cell.nodes.empty()) {
      throw std::invalid_argument("empty cells must not be materialized");
    }
    std::sort(cell.nodes.begin(), cell.nodes.end());
    n += cell.gamma();
  }
  p.n_ = n;
  p.cell_of_.assign(static_cast<std::size_t>(n), IndexSet());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!p.cell_index_.emplace(cells[i].J, static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate cell index set");
    }
    for (int x : cells[i].nodes) {
      if (x < 0 || x >= n) {
        throw std::invalid_argument("cell nodes must cover a dense range");
      }
      if (!p.cell_of_[static_cast<std::size_t>(x)].empty()) {
        throw std::invalid_argument("cells are not disjoint");
      }
      p.cell_of_[static_cast<std::size_t>(x)] = cells[i].J;
    }
  }
  p.cells_ = std::move(cells);
  return p;
}

std::vector<IndexSet> GammaPartition::support() const {
  std::vector<IndexSet> out;
  out.reserve(cells_.size());
  for (const auto& cell : cells_) out.push_back(cell.J);
  return out;
}

IndexSet GammaPartition::cell_of(int node) const {
  if (node < 0 || node >= n_) throw std::out_of_range("node id out of range");
  return cell_of_[static_cast<std::size_t>(node)];
}

int GammaPartition::gamma(IndexSet J) const {
  auto it = cell_index_.find(J);
  return it == cell_index_.end() ? 0 : cells_[static_cast<std::size_t>(it->second)].gamma();
}

const GammaCell* GammaPartition::find_cell(IndexSet J) const {
  auto it = cell_index_.find(J);
  return it == cell_index_.end() ? nullptr : &cells_[static_cast<std::size_t>(it->second)];
}

int GammaPartition::cell_degree(IndexSet J) const {
  if (gamma(J) == 0) {
    throw std::invalid_argument("empty cell has no vertices");
  }
  int sum = 0;
  for (const auto& cell : cells_) {
    if (cell.J.intersects(J)) sum += cell.gamma();
  }
  return sum - 1;
}

bool GammaPartition::adjacent(int u, int v) const {
  if (u == v) throw std::invalid_argument("adjacency is undefined for u == v");
  return cell_of(u).intersects(cell_of(v));
}

bool check_orbit_automorphism(const GammaPartition& p, const GraphUnion& g,
                              const std::vector<int>& perm) {
  const int n = p.node_count();
  if (static_cast<int>(perm.size()) != n || g.node_count() != n) {
    throw std::invalid_argument("permutation size must match the node count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int u = 0; u < n; ++u) {
    const int w = perm[static_cast<std::size_t>(u)];
    if (w < 0 || w >= n || seen[static_cast<std::size_t>(w)]) {
      throw std::invalid_argument("not a permutation of the node set");
    }
    seen[static_cast<std::size_t>(w)] = true;
    if (p.cell_of(u) != p.cell_of(w)) {
      throw std::invalid_argument("permutation moves a node across cells");
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) !=
          g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace cliquecover
