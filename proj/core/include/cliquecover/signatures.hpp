#pragma once

#include <map>
#include <vector>

#include "cliquecover/families.hpp"
#include "cliquecover/numeric.hpp"
#include "cliquecover/partition.hpp"
#include "cliquecover/polynomial.hpp"

namespace cliquecover {

// Per-cell node counts of a node subset H: J -> |H intersect Gamma_J|.
// Sparse; absent cells count zero. Two subsets with equal signatures are
// related by within-cell permutations.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::map<IndexSet, int> counts);

  const std::map<IndexSet, int>& counts() const { return counts_; }
  int at(IndexSet J) const;  // 0 when absent
  int total() const;         // |H|
  Family support() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<IndexSet, int> counts_;  // only positive entries stored
};

// Signature of the node set H. Throws on out-of-range or repeated nodes.
Signature signature_of(const GammaPartition& p, const std::vector<int>& H);

// Number of distinct signatures: product of (gamma_J + 1) over all cells.
BigInt count_signatures(const GammaPartition& p);

// Number of signatures sharing the given support: product of gamma_J over
// the support. Every member must be a non-empty cell.
BigInt count_signatures_with_support(const GammaPartition& p, const Family& support);

// Number of induced subgraphs with this exact signature: product of
// C(gamma_J, f(J)). Throws when f(J) exceeds gamma_J.
BigInt count_subgraphs_with_signature(const GammaPartition& p, const Signature& f);

// H induces a connected subgraph iff its support is path-intersecting.
// Throws when H is empty.
bool is_connected_subgraph(const GammaPartition& p, const std::vector<int>& H);

// Number of distinct signatures that induce a connected subgraph: sum over
// path-intersecting families of the product of gamma values.
BigInt count_connected_signatures(const GammaPartition& p);

// Generating function whose x^k coefficient counts induced connected
// subgraphs of size k: sum over path-intersecting families of the product
// of (1+x)^gamma_J - 1.
CountPolynomial connected_subgraph_gf(const GammaPartition& p);

}  // namespace cliquecover
