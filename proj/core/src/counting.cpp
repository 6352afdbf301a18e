#include "cliquecover/counting.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cliquecover {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_clique_cap(int m, int max_cliques, const char* what) {
  if (m > max_cliques) {
    throw std::invalid_argument(std::string(what) + " sums over 2^m subsets; m = " +
                                std::to_string(m) + " exceeds the cap of " +
                                std::to_string(max_cliques) +
                                " (raise the cap explicitly to proceed)");
  }
}

// Alternating sum over every non-empty subcollection of `sets`, with the
// running node-set intersection computed incrementally. `term` receives the
// subset parity (+1 for odd-sized subsets) and the intersection; returning
// false prunes all supersets (valid when their terms are known to vanish).
void foreach_subset_intersection(
    const std::vector<std::vector<int>>& sets,
    const std::function<bool(int parity, const std::vector<int>& inter)>& term) {
  const int m = static_cast<int>(sets.size());
  auto rec = [&](int start, const std::vector<int>& inter, int parity, auto&& self) -> void {
    if (!term(parity, inter)) return;
    for (int i = start; i < m; ++i) {
      self(i + 1, intersect_sorted(inter, sets[static_cast<std::size_t>(i)]), -parity, self);
    }
  };
  for (int i = 0; i < m; ++i) {
    rec(i + 1, sets[static_cast<std::size_t>(i)], +1, rec);
  }
}

}  // namespace

namespace {

// Inclusion/exclusion over a clique family counts exactly the r-cliques
// contained in at least one member, so the family must cover every clique
// of the graph union for the sum to equal the union count. The input
// collection usually does (each worked example is a set of maximal
// cliques), but unions can induce cliques spanning several inputs; any
// maximal clique not inside an input clique is appended to close the
// cover. On closed collections the result is untouched.
std::vector<std::vector<int>> cover_closed_cliques(const CliqueCollection& c,
                                                   int max_cliques) {
  std::vector<std::vector<int>> sets = c.cliques();
  const GammaPartition p = GammaPartition::build(c, max_cliques);
  for (const auto& mc : enumerate_maximal_cliques(p)) {
    const bool covered = std::any_of(sets.begin(), sets.end(), [&](const auto& s) {
      return std::includes(s.begin(), s.end(), mc.nodes.begin(), mc.nodes.end());
    });
    if (!covered) sets.push_back(mc.nodes);
  }
  return sets;
}

BigInt pie_r_clique_count(const std::vector<std::vector<int>>& sets, int r) {
  if (r == 0) return 1;  // the alternating subset sum telescopes to one
  BigInt total = 0;
  foreach_subset_intersection(sets, [&](int parity, const std::vector<int>& inter) {
    total += parity * binomial(static_cast<long long>(inter.size()), r);
    // deeper subsets only shrink the intersection, so once it cannot seat
    // an r-clique every descendant term is zero
    return static_cast<long long>(inter.size()) >= r;
  });
  return total;
}

}  // namespace

BigInt count_r_cliques_pie(const CliqueCollection& c, int r, int max_cliques) {
  if (r < 0) throw std::invalid_argument("clique size must be non-negative");
  check_clique_cap(c.clique_count(), max_cliques, "inclusion/exclusion");
  return pie_r_clique_count(cover_closed_cliques(c, max_cliques), r);
}

BigInt count_nontrivial_cliques(const CliqueCollection& c, int max_cliques) {
  check_clique_cap(c.clique_count(), max_cliques, "inclusion/exclusion");
  BigInt total = 0;
  foreach_subset_intersection(cover_closed_cliques(c, max_cliques),
                              [&](int parity, const std::vector<int>& inter) {
                                const long long size = static_cast<long long>(inter.size());
                                total += parity * (pow2(size) - binomial(size, 2));
                                return true;
                              });
  return total - c.node_count() - 1;
}

namespace {

// Maximal intersecting families over the support, found as the maximal
// cliques of the cell-intersection graph (pivoting recursive enumeration).
std::vector<std::vector<int>> maximal_cell_families(const std::vector<IndexSet>& cells) {
  const int k = static_cast<int>(cells.size());
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(k),
                                     std::vector<bool>(static_cast<std::size_t>(k), false));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          i != j && cells[static_cast<std::size_t>(i)].intersects(cells[static_cast<std::size_t>(j)]);
    }
  }

  std::vector<std::vector<int>> result;
  std::vector<int> current;
  auto expand = [&](std::vector<int> cand, std::vector<int> excluded, auto&& self) -> void {
    if (cand.empty() && excluded.empty()) {
      result.push_back(current);
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (int u : cand) {
      std::size_t cnt = 0;
      for (int v : cand) cnt += adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (pivot == -1 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
    for (int u : excluded) {
      std::size_t cnt = 0;
      for (int v : cand) cnt += adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (pivot == -1 || cnt > best) {
        pivot = u;
        best = cnt;
      }
    }
    const std::vector<int> branch_order = cand;
    for (int v : branch_order) {
      if (pivot >= 0 && adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)]) continue;
      std::vector<int> next_cand;
      std::vector<int> next_excl;
      for (int w : cand) {
        if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) next_cand.push_back(w);
      }
      for (int w : excluded) {
        if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) next_excl.push_back(w);
      }
      current.push_back(v);
      self(std::move(next_cand), std::move(next_excl), self);
      current.pop_back();
      cand.erase(std::find(cand.begin(), cand.end(), v));
      excluded.push_back(v);
    }
  };

  std::vector<int> all(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i;
  expand(std::move(all), {}, expand);
  return result;
}

Family support_of_clique(const GammaPartition& p, const std::vector<int>& H,
                         const char* caller) {
  const Family support = signature_of(p, H).support();
  if (H.empty() || !is_intersecting(support)) {
    throw std::invalid_argument(std::string(caller) + ": the node set does not induce a clique");
  }
  return support;
}

std::vector<std::vector<int>> maximal_clique_node_sets_containing(
    const GammaPartition& p, const std::vector<int>& H) {
  std::vector<int> sorted_h = H;
  std::sort(sorted_h.begin(), sorted_h.end());
  std::vector<std::vector<int>> out;
  for (const auto& mc : enumerate_maximal_cliques(p)) {
    if (std::includes(mc.nodes.begin(), mc.nodes.end(), sorted_h.begin(), sorted_h.end())) {
      out.push_back(mc.nodes);
    }
  }
  return out;
}

}  // namespace

std::vector<MaximalClique> enumerate_maximal_cliques(const GammaPartition& p) {
  const std::vector<IndexSet> cells = p.support();
  std::vector<MaximalClique> out;
  for (const auto& family_indices : maximal_cell_families(cells)) {
    MaximalClique mc;
    std::vector<IndexSet> members;
    for (int idx : family_indices) {
      const IndexSet J = cells[static_cast<std::size_t>(idx)];
      members.push_back(J);
      const GammaCell* cell = p.find_cell(J);
      mc.nodes.insert(mc.nodes.end(), cell->nodes.begin(), cell->nodes.end());
    }
    mc.support = Family(std::move(members));
    std::sort(mc.nodes.begin(), mc.nodes.end());
    out.push_back(std::move(mc));
  }
  std::sort(out.begin(), out.end(), [](const MaximalClique& a, const MaximalClique& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
    return a.nodes < b.nodes;
  });
  return out;
}

bool is_maximal_clique(const GammaPartition& p, const std::vector<int>& H) {
  const Family support = support_of_clique(p, H, "is_maximal_clique");
  const Signature sig = signature_of(p, H);
  for (IndexSet J : support.members()) {
    if (sig.at(J) != p.gamma(J)) return false;  // cell only partially used
  }
  for (const auto& cell : p.cells()) {
    if (support.contains(cell.J)) continue;
    bool extends = true;
    for (IndexSet K : support.members()) {
      if (!cell.J.intersects(K)) {
        extends = false;
        break;
      }
    }
    if (extends) return false;  // a non-empty outside cell joins every member
  }
  return true;
}

BigInt count_cliques_containing(const GammaPartition& p, const std::vector<int>& H) {
  support_of_clique(p, H, "count_cliques_containing");
  const auto maximal = maximal_clique_node_sets_containing(p, H);
  const std::size_t h = H.size();

  BigInt total = 1;  // H itself
  foreach_subset_intersection(maximal, [&](int parity, const std::vector<int>& inter) {
    total += parity * (pow2(static_cast<long long>(inter.size() - h)) - 1);
    // every maximal clique here contains H, so intersections never drop
    // below |H|; once they reach |H| exactly, deeper terms are zero
    return inter.size() > h;
  });
  return total;
}

std::vector<int> clique_extent(const GammaPartition& p, const std::vector<int>& H) {
  support_of_clique(p, H, "clique_extent");
  std::vector<int> out;
  for (const auto& nodes : maximal_clique_node_sets_containing(p, H)) {
    out.insert(out.end(), nodes.begin(), nodes.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt count_r_cliques_maximal(const GammaPartition& p, int r) {
  if (r < 0) throw std::invalid_argument("clique size must be non-negative");
  std::vector<std::vector<int>> maximal;
  for (const auto& mc : enumerate_maximal_cliques(p)) maximal.push_back(mc.nodes);
  return pie_r_clique_count(maximal, r);
}

CountPolynomial clique_gf(const GammaPartition& p) {
  CountPolynomial sum;
  std::vector<CountPolynomial> products = {CountPolynomial::one()};
  FamilyEnumerationHooks hooks;
  hooks.push = [&](IndexSet J) {
    products.push_back(products.back() * nonempty_subset_series(p.gamma(J)));
  };
  hooks.pop = [&] { products.pop_back(); };
  hooks.emit = [&] { sum += products.back(); };
  visit_intersecting_over(p.support(), hooks);
  return sum;
}

BigRational clique_gf_value(const GammaPartition& p,
                            const std::map<IndexSet, BigRational>& x) {
  // per-cell factor (1 + x_J)^gamma_J - 1
  std::map<IndexSet, BigRational> factor;
  for (const auto& cell : p.cells()) {
    auto it = x.find(cell.J);
    if (it == x.end()) {
      throw std::invalid_argument("assignment is missing a support cell");
    }
    BigRational pow = 1;
    const BigRational base = it->second + 1;
    for (int e = 0; e < cell.gamma(); ++e) pow *= base;
    factor.emplace(cell.J, pow - 1);
  }

  BigRational total = 0;
  std::vector<BigRational> products = {BigRational(1)};
  FamilyEnumerationHooks hooks;
  hooks.push = [&](IndexSet J) { products.push_back(products.back() * factor.at(J)); };
  hooks.pop = [&] { products.pop_back(); };
  hooks.emit = [&] { total += products.back(); };
  visit_intersecting_over(p.support(), hooks);
  return total;
}

BigInt count_all_cliques(const GammaPartition& p) {
  BigInt total = 0;
  std::vector<BigInt> products = {BigInt(1)};
  FamilyEnumerationHooks hooks;
  hooks.push = [&](IndexSet J) {
    products.push_back(products.back() * (pow2(p.gamma(J)) - 1));
  };
  hooks.pop = [&] { products.pop_back(); };
  hooks.emit = [&] { total += products.back(); };
  visit_intersecting_over(p.support(), hooks);
  return total;
}

BigInt count_edges_cell_formula(const GammaPartition& p) {
  const auto& cells = p.cells();
  BigInt total = 0;
  for (const auto& cell : cells) total += binomial(cell.gamma(), 2);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (cells[i].J.intersects(cells[j].J)) {
        total += BigInt(cells[i].gamma()) * cells[j].gamma();
      }
    }
  }
  return total;
}

BigInt count_edges_degree(const GammaPartition& p) {
  BigInt doubled = 0;
  for (const auto& cell : p.cells()) {
    doubled += BigInt(cell.gamma()) * p.cell_degree(cell.J);
  }
  return doubled / 2;
}

int clique_number(const GammaPartition& p) {
  int best = 0;
  for (const auto& mc : enumerate_maximal_cliques(p)) {
    best = std::max(best, static_cast<int>(mc.nodes.size()));
  }
  return best;
}

}  // namespace cliquecover
