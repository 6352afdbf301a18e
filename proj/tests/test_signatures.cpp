#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cliquecover/oracle.hpp"
#include "cliquecover/signatures.hpp"
#include "support/fixtures.hpp"

using namespace cliquecover;
using namespace cliquecover::testsupport;

TEST_CASE("signatures count nodes per cell") {
  const auto c = figure1();
  const auto p = GammaPartition::build(c);

  const auto s1 = signature_of(p, ids_of(c, {"1", "3", "6"}));
  CHECK(s1.counts() == std::map<IndexSet, int>{{J({1}), 1}, {J({1, 3}), 1}, {J({1, 2, 3}), 1}});
  CHECK(s1.total() == 3);
  CHECK(s1.at(J({2})) == 0);
  CHECK(s1.support() == Family{J({1}), J({1, 3}), J({1, 2, 3})});

  CHECK(signature_of(p, {}).counts().empty());

  const auto s2 = signature_of(p, ids_of(c, {"1", "2", "3"}));
  CHECK(s2.counts() == std::map<IndexSet, int>{{J({1, 3}), 1}, {J({1, 2, 3}), 2}});

  // type-isomorphic pair from the worked example: {1,3,6} and {2,3,6}
  CHECK(signature_of(p, ids_of(c, {"2", "3", "6"})) == s1);

  CHECK_THROWS_AS(signature_of(p, {42}), std::invalid_argument);
  CHECK_THROWS_AS(signature_of(p, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Signature({{IndexSet(), 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Signature({{J({1}), -1}}), std::invalid_argument);
}

TEST_CASE("number of distinct signatures is the product of gamma+1") {
  const auto c = figure1();
  const auto p = GammaPartition::build(c);
  CHECK(count_signatures(p) == 216);
  CHECK(count_signatures(GammaPartition::build(single_clique(5))) == 6);
  CHECK(count_signatures(GammaPartition::build(disjoint_pair())) == 9);

  // cross-check by enumerating the signatures of all 2^9 subsets
  std::set<std::map<IndexSet, int>> seen;
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    seen.insert(signature_of(p, mask_nodes(mask)).counts());
  }
  CHECK(BigInt(seen.size()) == count_signatures(p));
}

TEST_CASE("signatures sharing a support") {
  const auto c = figure1();
  const auto p = GammaPartition::build(c);
  const Family supp{J({1}), J({1, 3}), J({1, 2, 3})};
  CHECK(count_signatures_with_support(p, supp) == 4);
  CHECK(count_signatures_with_support(p, Family{J({1, 2, 3})}) == 2);

  Family full(p.support());
  CHECK(count_signatures_with_support(p, full) == 8);

  CHECK_THROWS_AS(count_signatures_with_support(p, Family{J({1, 2})}),
                  std::invalid_argument);

  // enumeration cross-check for the three-cell support
  std::set<std::map<IndexSet, int>> seen;
  for (std::uint32_t mask = 1; mask < (1u << 9); ++mask) {
    const auto sig = signature_of(p, mask_nodes(mask));
    if (sig.support() == supp) seen.insert(sig.counts());
  }
  CHECK(BigInt(seen.size()) == count_signatures_with_support(p, supp));
}

TEST_CASE("subgraphs with a fixed signature") {
  const auto c = figure1();
  const auto p = GammaPartition::build(c);

  const Signature f({{J({1}), 1}, {J({1, 3}), 1}, {J({1, 2, 3}), 1}});
  CHECK(count_subgraphs_with_signature(p, f) == 4);

  std::map<IndexSet, int> full;
  for (const auto& cell : p.cells()) full[cell.J] = cell.gamma();
  CHECK(count_subgraphs_with_signature(p, Signature(full)) == 1);

  CHECK(count_subgraphs_with_signature(p, Signature({{J({1, 2, 3}), 2}})) == 1);

  CHECK_THROWS_AS(count_subgraphs_with_signature(p, Signature({{J({3}), 2}})),
                  std::invalid_argument);

  // enumeration cross-check
  int enumerated = 0;
  for (std::uint32_t mask = 1; mask < (1u << 9); ++mask) {
    if (signature_of(p, mask_nodes(mask)) == f) ++enumerated;
  }
  CHECK(BigInt(enumerated) == count_subgraphs_with_signature(p, f));
}

TEST_CASE("per-support signature totals obey the binomial identity") {
  const auto p = GammaPartition::build(figure1());
  for (const Family& supp : {Family{J({1}), J({1, 3}), J({1, 2, 3})}, Family(p.support()),
                             Family{J({1, 2, 3})}}) {
    // sum over signatures with this support of the subgraph counts
    std::vector<IndexSet> members = supp.members();
    BigInt total = 0;
    std::map<IndexSet, int> counts;
    auto rec = [&](std::size_t i, auto&& self) -> void {
      if (i == members.size()) {
        total += count_subgraphs_with_signature(p, Signature(counts));
        return;
      }
      for (int k = 1; k <= p.gamma(members[i]); ++k) {
        counts[members[i]] = k;
        self(i + 1, self);
      }
      counts.erase(members[i]);
    };
    rec(0, rec);

    BigInt expected = 1;
    for (IndexSet Jm : members) expected *= pow2(p.gamma(Jm)) - 1;
    CHECK(total == expected);
  }
}

TEST_CASE("connectivity is path-intersecting support") {
  const auto c = figure1();
  const auto p = GammaPartition::build(c);
  const auto g = GraphUnion::from_collection(c);

  CHECK_FALSE(is_connected_subgraph(p, ids_of(c, {"5", "9"})));
  CHECK(is_connected_subgraph(p, ids_of(c, {"5", "3", "9"})));
  CHECK(is_connected_subgraph(p, {0}));
  CHECK_THROWS_AS(is_connected_subgraph(p, {}), std::invalid_argument);

  for (std::uint32_t mask = 1; mask < (1u << 9); ++mask) {
    const auto nodes = mask_nodes(mask);
    CHECK(is_connected_subgraph(p, nodes) == brute_connected(g, nodes));
  }
}

TEST_CASE("connected signature counts") {
  CHECK(count_connected_signatures(GammaPartition::build(single_clique(6))) == 6);
  CHECK(count_connected_signatures(GammaPartition::build(disjoint_pair())) == 4);

  const auto c = figure1();
  const auto p = GammaPartition::build(c);
  CHECK(count_connected_signatures(p) == 179);

  // oracle: distinct signatures over connected subsets of all 2^9 subsets
  const auto g = GraphUnion::from_collection(c);
  std::set<std::map<IndexSet, int>> seen;
  for (std::uint32_t mask = 1; mask < (1u << 9); ++mask) {
    const auto nodes = mask_nodes(mask);
    if (brute_connected(g, nodes)) seen.insert(signature_of(p, nodes).counts());
  }
  CHECK(BigInt(seen.size()) == count_connected_signatures(p));
}

TEST_CASE("connected generating function") {
  CHECK(connected_subgraph_gf(GammaPartition::build(single_clique(4))) ==
        CountPolynomial({0, 4, 6, 4, 1}));
  CHECK(connected_subgraph_gf(GammaPartition::build(disjoint_pair())) ==
        CountPolynomial({0, 4, 2}));

  const auto c = figure1();
  const auto p = GammaPartition::build(c);
  const auto gf = connected_subgraph_gf(p);
  CHECK(gf == CountPolynomial({0, 9, 24, 60, 103, 115, 82, 36, 9, 1}));
  CHECK(gf == oracle::brute_connected_counts(GraphUnion::from_collection(c)));
  CHECK(gf.coefficient(1) == p.node_count());
}
