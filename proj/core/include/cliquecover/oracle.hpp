#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cliquecover/collection.hpp"
#include "cliquecover/numeric.hpp"
#include "cliquecover/partition.hpp"
#include "cliquecover/polynomial.hpp"

namespace cliquecover::oracle {

// Brute-force reference implementations. They read only raw adjacency (or
// the raw collection) and deliberately share no formula code with the
// counting modules; they exist to cross-check them.

// Exact r-clique count by testing node subsets for pairwise adjacency.
// Full subset scan up to n = 25, recursive clique extension beyond.
BigInt brute_count_r_cliques(const GraphUnion& g, int r);

// The two strategies behind brute_count_r_cliques, exposed so they can be
// checked against each other on the overlap range.
BigInt brute_count_r_cliques_subsets(const GraphUnion& g, int r);
BigInt brute_count_r_cliques_extension(const GraphUnion& g, int r);

// All maximal cliques via pivoting recursive enumeration (n <= 30); each
// clique ascending, list sorted lexicographically.
std::vector<std::vector<int>> brute_maximal_cliques(const GraphUnion& g);

// Coefficient k = number of connected induced subgraphs of size k, by
// breadth-first search over every node subset (n <= 15).
CountPolynomial brute_connected_counts(const GraphUnion& g);

// Direct evaluation of every cell as (intersection over J) minus (union
// over the complement), for all 2^m index sets (m <= 15).
GammaPartition brute_gamma_partition(const CliqueCollection& c);

// Random collection for verification runs: clique sizes and node pools
// drawn from the generator, labels "1".."pool". Uses modulo draws rather
// than std::uniform_int_distribution so runs are reproducible across
// platforms.
CliqueCollection random_collection(std::mt19937_64& rng, int max_nodes,
                                   int max_cliques);

struct OracleCheck {
  std::string name;
  std::string formula_value;
  std::string oracle_value;
  bool pass = false;
};

struct OracleReport {
  std::uint64_t seed = 0;
  int instances = 0;
  std::vector<OracleCheck> checks;

  bool all_pass() const;
};

// Cross-check the formula paths against the brute-force paths on randomly
// generated instances. Deterministic for a fixed seed.
OracleReport run_verification(std::uint64_t seed, int instances);

}  // namespace cliquecover::oracle
