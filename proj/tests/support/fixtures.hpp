#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cliquecover/collection.hpp"
#include "cliquecover/families.hpp"
#include "cliquecover/index_set.hpp"
#include "cliquecover/numeric.hpp"
#include "cliquecover/partition.hpp"
#include "cliquecover/signatures.hpp"

namespace cliquecover::testsupport {

inline CliqueCollection make_collection(const std::vector<std::vector<std::string>>& cliques) {
  return CliqueCollection::from_label_cliques(cliques);
}

// The three-clique worked example used throughout: A = {1,2,3,5,6},
// B = {1,2,4,7,8}, C = {1,2,3,4,9}.
inline CliqueCollection figure1() {
  return make_collection({{"1", "2", "3", "5", "6"},
                          {"1", "2", "4", "7", "8"},
                          {"1", "2", "3", "4", "9"}});
}

inline CliqueCollection two_triangles() {
  return make_collection({{"1", "2", "3"}, {"2", "3", "4"}});
}

inline CliqueCollection single_clique(int r) {
  std::vector<std::string> labels;
  for (int i = 1; i <= r; ++i) labels.push_back(std::to_string(i));
  return make_collection({labels});
}

inline CliqueCollection disjoint_pair() {
  return make_collection({{"1", "2"}, {"3", "4"}});
}

// Edges of a triangle as three 2-cliques; the union induces a 3-clique
// contained in no single input clique.
inline CliqueCollection triangle_of_edges() {
  return make_collection({{"1", "2"}, {"2", "3"}, {"1", "3"}});
}

inline std::vector<int> ids_of(const CliqueCollection& c,
                               const std::vector<std::string>& labels) {
  return c.node_ids(labels);
}

inline IndexSet J(std::initializer_list<int> one_based) {
  IndexSet s;
  for (int j : one_based) s = s.with(j - 1);
  return s;
}

// ---- test-side brute force helpers (raw adjacency only) ----

inline bool brute_is_clique(const GraphUnion& g, const std::vector<int>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!g.adjacent(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

// Cliques (of size >= |H|+0) that contain H, counted by extending H with
// common neighbours; includes H itself.
inline BigInt brute_cliques_containing(const GraphUnion& g, const std::vector<int>& H) {
  const int n = g.node_count();
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v) {
    if (std::find(H.begin(), H.end(), v) != H.end()) continue;
    bool joins = true;
    for (int u : H) {
      if (!g.adjacent(u, v)) {
        joins = false;
        break;
      }
    }
    if (joins) candidates.push_back(v);
  }
  BigInt count = 0;
  std::vector<int> chosen;
  auto rec = [&](std::size_t start, auto&& self) -> void {
    ++count;  // H plus the currently chosen extension
    for (std::size_t i = start; i < candidates.size(); ++i) {
      bool joins = true;
      for (int u : chosen) {
        if (!g.adjacent(u, candidates[i])) {
          joins = false;
          break;
        }
      }
      if (!joins) continue;
      chosen.push_back(candidates[i]);
      self(i + 1, self);
      chosen.pop_back();
    }
  };
  rec(0, rec);
  return count;
}

inline bool brute_connected(const GraphUnion& g, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  std::set<int> inside(nodes.begin(), nodes.end());
  std::set<int> seen = {nodes.front()};
  std::vector<int> stack = {nodes.front()};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : inside) {
      if (!seen.count(v) && g.adjacent(u, v)) {
        seen.insert(v);
        stack.push_back(v);
      }
    }
  }
  return seen.size() == inside.size();
}

inline std::vector<int> mask_nodes(std::uint32_t mask) {
  std::vector<int> nodes;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) nodes.push_back(v);
  }
  return nodes;
}

// All maximal intersecting families over the non-empty subsets of [m],
// found by walking every intersecting family and keeping those that no
// further subset extends. Exponential; fine for m <= 5.
inline std::vector<std::set<std::uint64_t>> brute_maximal_intersecting_families(int m) {
  const int count = (1 << m) - 1;
  std::vector<std::uint64_t> sets;
  for (std::uint64_t s = 1; s <= static_cast<std::uint64_t>(count); ++s) sets.push_back(s);

  // compat[i] = bitmask over set indices j with sets[i] & sets[j] != 0
  std::vector<std::uint64_t> compat(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (sets[i] & sets[j]) compat[i] |= std::uint64_t{1} << j;
    }
  }

  std::vector<std::set<std::uint64_t>> result;
  std::vector<std::size_t> members;
  auto rec = [&](std::size_t start, std::uint64_t member_mask, auto&& self) -> void {
    if (member_mask != 0) {
      bool maximal = true;
      for (std::size_t k = 0; k < sets.size(); ++k) {
        const bool inside = (member_mask >> k) & 1;
        if (!inside && (member_mask & ~compat[k]) == 0) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        std::set<std::uint64_t> family;
        for (std::size_t i : members) family.insert(sets[i]);
        result.push_back(std::move(family));
      }
    }
    for (std::size_t i = start; i < sets.size(); ++i) {
      if ((member_mask & ~compat[i]) != 0) continue;  // misses a member
      members.push_back(i);
      self(i + 1, member_mask | (std::uint64_t{1} << i), self);
      members.pop_back();
    }
  };
  rec(0, 0, rec);
  return result;
}

inline std::set<std::uint64_t> family_bits(const Family& f) {
  std::set<std::uint64_t> out;
  for (IndexSet J : f.members()) out.insert(J.bits());
  return out;
}

// Deterministic node permutation fixing every cell setwise.
inline std::vector<int> random_within_cell_permutation(const GammaPartition& p,
                                                       std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(p.node_count()));
  for (int u = 0; u < p.node_count(); ++u) perm[static_cast<std::size_t>(u)] = u;
  for (const auto& cell : p.cells()) {
    std::vector<int> image = cell.nodes;
    for (std::size_t i = image.size(); i > 1; --i) {
      std::swap(image[i - 1], image[rng() % i]);
    }
    for (std::size_t i = 0; i < image.size(); ++i) {
      perm[static_cast<std::size_t>(cell.nodes[i])] = image[i];
    }
  }
  return perm;
}

}  // namespace cliquecover::testsupport
