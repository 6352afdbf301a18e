#include "cliquecover/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "cliquecover/counting.hpp"
#include "cliquecover/quotient.hpp"
#include "cliquecover/signatures.hpp"

namespace cliquecover::oracle {

BigInt brute_count_r_cliques_subsets(const GraphUnion& g, int r) {
  if (r < 0) throw std::invalid_argument("clique size must be non-negative");
  if (r == 0) return 1;
  const int n = g.node_count();
  if (r > n) return 0;

  BigInt count = 0;
  std::vector<int> pick(static_cast<std::size_t>(r));
  auto rec = [&](int start, int depth, auto&& self) -> void {
    if (depth == r) {
      for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
          if (!g.adjacent(pick[static_cast<std::size_t>(i)], pick[static_cast<std::size_t>(j)])) {
            return;
          }
        }
      }
      ++count;
      return;
    }
    for (int v = start; v <= n - (r - depth); ++v) {
      pick[static_cast<std::size_t>(depth)] = v;
      self(v + 1, depth + 1, self);
    }
  };
  rec(0, 0, rec);
  return count;
}

BigInt brute_count_r_cliques_extension(const GraphUnion& g, int r) {
  if (r < 0) throw std::invalid_argument("clique size must be non-negative");
  if (r == 0) return 1;
  const int n = g.node_count();
  if (r > n) return 0;

  BigInt count = 0;
  std::vector<int> clique;
  auto rec = [&](int start, auto&& self) -> void {
    if (static_cast<int>(clique.size()) == r) {
      ++count;
      return;
    }
    for (int v = start; v < n; ++v) {
      bool joins = true;
      for (int u : clique) {
        if (!g.adjacent(u, v)) {
          joins = false;
          break;
        }
      }
      if (!joins) continue;
      clique.push_back(v);
      self(v + 1, self);
      clique.pop_back();
    }
  };
  rec(0, rec);
  return count;
}

BigInt brute_count_r_cliques(const GraphUnion& g, int r) {
  return g.node_count() <= 25 ? brute_count_r_cliques_subsets(g, r)
                              : brute_count_r_cliques_extension(g, r);
}

std::vector<std::vector<int>> brute_maximal_cliques(const GraphUnion& g) {
  const int n = g.node_count();
  if (n > 30) {
    throw std::invalid_argument("brute-force maximal-clique enumeration capped at 30 nodes");
  }

  std::vector<std::vector<int>> result;
  std::vector<int> current;
  auto expand = [&](std::vector<int> cand, std::vector<int> excluded, auto&& self) -> void {
    if (cand.empty() && excluded.empty()) {
      result.push_back(current);
      return;
    }
    int pivot = -1;
    int best = -1;
    for (const auto& pool : {cand, excluded}) {
      for (int u : pool) {
        int cnt = 0;
        for (int v : cand) cnt += g.adjacent(u, v);
        if (cnt > best) {
          pivot = u;
          best = cnt;
        }
      }
    }
    const std::vector<int> branch_order = cand;
    for (int v : branch_order) {
      if (g.adjacent(pivot, v)) continue;
      std::vector<int> next_cand;
      std::vector<int> next_excl;
      for (int w : cand) {
        if (g.adjacent(v, w)) next_cand.push_back(w);
      }
      for (int w : excluded) {
        if (g.adjacent(v, w)) next_excl.push_back(w);
      }
      current.push_back(v);
      self(std::move(next_cand), std::move(next_excl), self);
      current.pop_back();
      cand.erase(std::find(cand.begin(), cand.end(), v));
      excluded.push_back(v);
    }
  };

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  expand(std::move(all), {}, expand);

  for (auto& clique : result) std::sort(clique.begin(), clique.end());
  std::sort(result.begin(), result.end());
  return result;
}

CountPolynomial brute_connected_counts(const GraphUnion& g) {
  const int n = g.node_count();
  if (n > 15) {
    throw std::invalid_argument("brute-force connected counting capped at 15 nodes");
  }
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.adjacent(u, v)) nbr[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
    }
  }

  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const std::uint32_t seed = mask & (~mask + 1);
    std::uint32_t reached = seed;
    std::uint32_t frontier = seed;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        next |= nbr[static_cast<std::size_t>(std::countr_zero(f))];
      }
      next &= mask & ~reached;
      reached |= next;
      frontier = next;
    }
    if (reached == mask) {
      coeffs[static_cast<std::size_t>(std::popcount(mask))] += 1;
    }
  }
  return CountPolynomial(std::move(coeffs));
}

GammaPartition brute_gamma_partition(const CliqueCollection& c) {
  const int m = c.clique_count();
  if (m > 15) {
    throw std::invalid_argument("brute-force partition evaluation capped at 15 cliques");
  }
  std::vector<GammaCell> cells;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
    std::set<int> inter;
    bool first = true;
    std::set<int> rest;
    for (int j = 0; j < m; ++j) {
      const auto& clique = c.clique(j);
      if ((bits >> j) & 1) {
        const std::set<int> cj(clique.begin(), clique.end());
        if (first) {
          inter = cj;
          first = false;
        } else {
          std::set<int> keep;
          std::set_intersection(inter.begin(), inter.end(), cj.begin(), cj.end(),
                                std::inserter(keep, keep.begin()));
          inter = std::move(keep);
        }
      } else {
        rest.insert(clique.begin(), clique.end());
      }
    }
    std::vector<int> nodes;
    std::set_difference(inter.begin(), inter.end(), rest.begin(), rest.end(),
                        std::back_inserter(nodes));
    if (!nodes.empty()) {
      cells.push_back({IndexSet::from_bits(bits), std::move(nodes)});
    }
  }
  return GammaPartition::from_cells(m, std::move(cells));
}

CliqueCollection random_collection(std::mt19937_64& rng, int max_nodes,
                                   int max_cliques) {
  if (max_nodes < 1 || max_cliques < 1) {
    throw std::invalid_argument("instance bounds must be positive");
  }
  const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_cliques));
  const int pool = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_nodes));

  std::vector<std::vector<std::string>> cliques;
  std::vector<int> ids(static_cast<std::size_t>(pool));
  for (int i = 0; i < pool; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
  for (int j = 0; j < m; ++j) {
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(pool));
    // Fisher-Yates prefix of length `size`
    for (int i = 0; i < size; ++i) {
      const int swap_with = i + static_cast<int>(rng() % static_cast<std::uint64_t>(pool - i));
      std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(swap_with)]);
    }
    std::vector<std::string> labels;
    for (int i = 0; i < size; ++i) labels.push_back(std::to_string(ids[static_cast<std::size_t>(i)]));
    cliques.push_back(std::move(labels));
  }
  return CliqueCollection::from_label_cliques(cliques);
}

bool OracleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const OracleCheck& c) { return c.pass; });
}

namespace {

class CheckAccumulator {
 public:
  explicit CheckAccumulator(std::string name) : check_{std::move(name), "", "", true} {}

  template <typename L, typename R>
  void expect_equal(int instance, const L& formula, const R& oracle) {
    if (!check_.pass) return;
    std::ostringstream lhs;
    lhs << formula;
    std::ostringstream rhs;
    rhs << oracle;
    if (lhs.str() != rhs.str()) {
      check_.pass = false;
      check_.formula_value = lhs.str() + " (instance " + std::to_string(instance) + ")";
      check_.oracle_value = rhs.str();
    }
  }

  OracleCheck finish(int instances) && {
    if (check_.pass) {
      check_.formula_value = "matched on " + std::to_string(instances) + " instances";
      check_.oracle_value = check_.formula_value;
    }
    return std::move(check_);
  }

 private:
  OracleCheck check_;
};

std::string poly_string(const CountPolynomial& p) {
  std::ostringstream out;
  out << '[';
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) out << ' ';
    out << p.coefficient(k);
  }
  out << ']';
  return out.str();
}

std::string node_sets_string(const std::vector<std::vector<int>>& sets) {
  std::ostringstream out;
  for (const auto& s : sets) {
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out << ' ';
      out << s[i];
    }
    out << '}';
  }
  return out.str();
}

}  // namespace

OracleReport run_verification(std::uint64_t seed, int instances) {
  if (instances < 1) throw std::invalid_argument("instance count must be positive");

  OracleReport report;
  report.seed = seed;
  report.instances = instances;

  CheckAccumulator partition_check("gamma_partition_matches_brute");
  CheckAccumulator reconstruction_check("cliques_reassemble_from_cells");
  CheckAccumulator adjacency_check("adjacency_equals_index_intersection");
  CheckAccumulator degree_check("cell_degree_matches_graph");
  CheckAccumulator orbit_check("within_cell_permutations_are_automorphisms");
  CheckAccumulator clique_count_check("clique_counts_agree_all_routes");
  CheckAccumulator edge_check("edge_formulas_match_edge_count");
  CheckAccumulator maximal_check("maximal_cliques_match_brute");
  CheckAccumulator clique_number_check("clique_number_matches_brute");
  CheckAccumulator connected_check("connected_gf_matches_brute");
  CheckAccumulator total_check("total_clique_count_consistent");

  std::mt19937_64 rng(seed);
  for (int inst = 0; inst < instances; ++inst) {
    const CliqueCollection c = random_collection(rng, 12, 5);
    const GraphUnion g = GraphUnion::from_collection(c);
    const GammaPartition p = GammaPartition::build(c);
    const int n = c.node_count();

    {
      const GammaPartition brute = brute_gamma_partition(c);
      partition_check.expect_equal(inst, p.cells() == brute.cells() ? "equal" : "differs",
                                   "equal");
    }

    for (int j = 0; j < c.clique_count(); ++j) {
      std::vector<int> reassembled;
      for (const auto& cell : p.cells()) {
        if (cell.J.contains(j)) {
          reassembled.insert(reassembled.end(), cell.nodes.begin(), cell.nodes.end());
        }
      }
      std::sort(reassembled.begin(), reassembled.end());
      reconstruction_check.expect_equal(inst, node_sets_string({reassembled}),
                                        node_sets_string({c.clique(j)}));
    }

    bool adjacency_ok = true;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        adjacency_ok = adjacency_ok && p.adjacent(u, v) == g.adjacent(u, v);
      }
    }
    adjacency_check.expect_equal(inst, adjacency_ok ? "agrees" : "differs", "agrees");

    for (const auto& cell : p.cells()) {
      degree_check.expect_equal(inst, p.cell_degree(cell.J), g.degree(cell.nodes.front()));
    }

    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int u = 0; u < n; ++u) perm[static_cast<std::size_t>(u)] = u;
      for (const auto& cell : p.cells()) {
        // in-place shuffle of each cell's image
        std::vector<int> image = cell.nodes;
        for (std::size_t i = image.size(); i > 1; --i) {
          std::swap(image[i - 1], image[rng() % i]);
        }
        for (std::size_t i = 0; i < image.size(); ++i) {
          perm[static_cast<std::size_t>(cell.nodes[i])] = image[i];
        }
      }
      orbit_check.expect_equal(inst, check_orbit_automorphism(p, g, perm), true);
    }

    const CountPolynomial gf = clique_gf(p);
    for (int r = 1; r <= n + 1; ++r) {
      const BigInt expected = brute_count_r_cliques(g, r);
      clique_count_check.expect_equal(inst, count_r_cliques_pie(c, r), expected);
      clique_count_check.expect_equal(inst, count_r_cliques_maximal(p, r), expected);
      clique_count_check.expect_equal(inst, gf.coefficient(r), expected);
    }

    edge_check.expect_equal(inst, count_edges_cell_formula(p), g.edge_count());
    edge_check.expect_equal(inst, count_edges_degree(p), g.edge_count());

    {
      std::vector<std::vector<int>> formula_sets;
      for (const auto& mc : enumerate_maximal_cliques(p)) formula_sets.push_back(mc.nodes);
      std::sort(formula_sets.begin(), formula_sets.end());
      maximal_check.expect_equal(inst, node_sets_string(formula_sets),
                                 node_sets_string(brute_maximal_cliques(g)));
    }

    {
      int brute_best = 0;
      for (const auto& clique : brute_maximal_cliques(g)) {
        brute_best = std::max(brute_best, static_cast<int>(clique.size()));
      }
      clique_number_check.expect_equal(inst, clique_number(p), brute_best);
    }

    connected_check.expect_equal(inst, poly_string(connected_subgraph_gf(p)),
                                 poly_string(brute_connected_counts(g)));

    {
      BigInt brute_total = 0;
      for (int r = 1; r <= n; ++r) brute_total += brute_count_r_cliques(g, r);
      total_check.expect_equal(inst, count_all_cliques(p), brute_total);
      total_check.expect_equal(inst, gf.evaluate(1), brute_total);
    }
  }

  report.checks.push_back(std::move(partition_check).finish(instances));
  report.checks.push_back(std::move(reconstruction_check).finish(instances));
  report.checks.push_back(std::move(adjacency_check).finish(instances));
  report.checks.push_back(std::move(degree_check).finish(instances));
  report.checks.push_back(std::move(orbit_check).finish(instances));
  report.checks.push_back(std::move(clique_count_check).finish(instances));
  report.checks.push_back(std::move(edge_check).finish(instances));
  report.checks.push_back(std::move(maximal_check).finish(instances));
  report.checks.push_back(std::move(clique_number_check).finish(instances));
  report.checks.push_back(std::move(connected_check).finish(instances));
  report.checks.push_back(std::move(total_check).finish(instances));
  return report;
}

}  // namespace cliquecover::oracle
