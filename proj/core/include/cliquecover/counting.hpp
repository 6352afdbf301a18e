#pragma once

#include <map>
#include <vector>

#include "cliquecover/collection.hpp"
#include "cliquecover/families.hpp"
#include "cliquecover/numeric.hpp"
#include "cliquecover/partition.hpp"
#include "cliquecover/polynomial.hpp"
#include "cliquecover/signatures.hpp"

namespace cliquecover {

// A maximal clique together with its support, which is a maximal
// intersecting family over the non-empty cells; the clique is the union of
// the full cells of that family.
struct MaximalClique {
  std::vector<int> nodes;  // ascending node ids
  Family support;

  friend bool operator==(const MaximalClique&, const MaximalClique&) = default;
};

// Number of r-cliques in the graph union by inclusion/exclusion: sum over
// non-empty subcollections of (-1)^{|J|+1} C(|intersection|, r). The sum
// runs over the input cliques, extended by any maximal clique of the union
// not contained in an input clique (without which the alternating sum only
// counts r-cliques inside single inputs; collections whose members include
// all maximal cliques, like the worked examples, are left untouched).
BigInt count_r_cliques_pie(const CliqueCollection& c, int r,
                           int max_cliques = kDefaultMaxCliques);

// Number of cliques of size >= 3: the alternating sum of 2^I - C(I, 2)
// over intersections of the same cover-closed family, minus n, minus 1.
BigInt count_nontrivial_cliques(const CliqueCollection& c,
                                int max_cliques = kDefaultMaxCliques);

// Every maximal clique of the graph union, exactly once, as unions of
// whole cells of maximal intersecting families over the support. Sorted by
// size descending, then by node ids.
std::vector<MaximalClique> enumerate_maximal_cliques(const GammaPartition& p);

// H (a clique; throws otherwise) is maximal iff it exhausts every cell it
// touches and no non-empty cell outside its support intersects all of it.
bool is_maximal_clique(const GammaPartition& p, const std::vector<int>& H);

// Number of cliques containing the clique H (H itself included):
// inclusion/exclusion over the node sets of the maximal cliques containing
// H. Throws when H is not a clique.
BigInt count_cliques_containing(const GammaPartition& p, const std::vector<int>& H);

// Union of all maximal cliques containing the clique H.
std::vector<int> clique_extent(const GammaPartition& p, const std::vector<int>& H);

// Number of r-cliques by inclusion/exclusion over the maximal cliques
// (often fewer terms than the input collection).
BigInt count_r_cliques_maximal(const GammaPartition& p, int r);

// Generating function whose x^r coefficient counts r-cliques (r >= 1):
// sum over intersecting families on the support of the product of
// (1+x)^gamma_J - 1.
CountPolynomial clique_gf(const GammaPartition& p);

// Pointwise evaluation of the clique generating function at a per-cell
// assignment x_J; every support cell needs a value. The multivariate series
// is never materialized.
BigRational clique_gf_value(const GammaPartition& p,
                            const std::map<IndexSet, BigRational>& x);

// Total number of cliques of size >= 1: sum over intersecting families of
// the product of 2^gamma_J - 1 (the generating function at x = 1).
BigInt count_all_cliques(const GammaPartition& p);

// Edge count from cell cardinalities: within-cell pairs plus cross-cell
// products over intersecting cell pairs.
BigInt count_edges_cell_formula(const GammaPartition& p);

// Edge count from the degree of each cell (handshake over cells).
BigInt count_edges_degree(const GammaPartition& p);

// Size of the largest clique: the best total gamma over maximal
// intersecting families, i.e. the largest maximal clique.
int clique_number(const GammaPartition& p);

}  // namespace cliquecover
