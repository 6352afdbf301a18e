#include "cliquecover/signatures.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cliquecover {

Signature::Signature(std::map<IndexSet, int> counts) : counts_(std::move(counts)) {
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second < 0) {
      throw std::invalid_argument("signature counts must be non-negative");
    }
    if (it->first.empty()) {
      throw std::invalid_argument("signature keyed by an empty index set");
    }
    it = it->second == 0 ? counts_.erase(it) : std::next(it);
  }
}

int Signature::at(IndexSet J) const {
  auto it = counts_.find(J);
  return it == counts_.end() ? 0 : it->second;
}

int Signature::total() const {
  int sum = 0;
  for (const auto& [J, count] : counts_) sum += count;
  return sum;
}

Family Signature::support() const {
  std::vector<IndexSet> members;
  members.reserve(counts_.size());
  for (const auto& [J, count] : counts_) members.push_back(J);
  return Family(std::move(members));
}

namespace {

// Validated copy of H: in-range, duplicate-free.
std::vector<int> checked_node_set(const GammaPartition& p, const std::vector<int>& H) {
  std::vector<int> nodes = H;
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw std::invalid_argument("node set contains a repeated node");
  }
  for (int x : nodes) {
    if (x < 0 || x >= p.node_count()) {
      throw std::invalid_argument("unknown node in subset");
    }
  }
  return nodes;
}

}  // namespace

Signature signature_of(const GammaPartition& p, const std::vector<int>& H) {
  std::map<IndexSet, int> counts;
  for (int x : checked_node_set(p, H)) ++counts[p.cell_of(x)];
  return Signature(std::move(counts));
}

BigInt count_signatures(const GammaPartition& p) {
  BigInt product = 1;
  for (const auto& cell : p.cells()) product *= cell.gamma() + 1;
  return product;
}

BigInt count_signatures_with_support(const GammaPartition& p, const Family& support) {
  BigInt product = 1;
  for (IndexSet J : support.members()) {
    const int g = p.gamma(J);
    if (g == 0) {
      throw std::invalid_argument("support member is an empty cell");
    }
    product *= g;
  }
  return product;
}

BigInt count_subgraphs_with_signature(const GammaPartition& p, const Signature& f) {
  BigInt product = 1;
  for (const auto& [J, count] : f.counts()) {
    const int g = p.gamma(J);
    if (count > g) {
      throw std::invalid_argument("signature requests more nodes than the cell holds");
    }
    product *= binomial(g, count);
  }
  return product;
}

bool is_connected_subgraph(const GammaPartition& p, const std::vector<int>& H) {
  if (H.empty()) {
    throw std::invalid_argument("connectivity is undefined for the empty subset");
  }
  return is_path_intersecting(signature_of(p, H).support());
}

BigInt count_connected_signatures(const GammaPartition& p) {
  BigInt total = 0;
  std::vector<BigInt> products = {1};
  FamilyEnumerationHooks hooks;
  hooks.push = [&](IndexSet J) { products.push_back(products.back() * p.gamma(J)); };
  hooks.pop = [&] { products.pop_back(); };
  hooks.emit = [&] { total += products.back(); };
  visit_path_intersecting_over(p.support(), hooks);
  return total;
}

CountPolynomial connected_subgraph_gf(const GammaPartition& p) {
  CountPolynomial sum;
  std::vector<CountPolynomial> products = {CountPolynomial::one()};
  FamilyEnumerationHooks hooks;
  hooks.push = [&](IndexSet J) {
    products.push_back(products.back() * nonempty_subset_series(p.gamma(J)));
  };
  hooks.pop = [&] { products.pop_back(); };
  hooks.emit = [&] { sum += products.back(); };
  visit_path_intersecting_over(p.support(), hooks);
  return sum;
}

}  // namespace cliquecover
