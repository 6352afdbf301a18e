#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "cliquecover/quotient.hpp"
#include "support/fixtures.hpp"

using namespace cliquecover;
using namespace cliquecover::testsupport;

namespace {

const std::vector<std::vector<long long>> kFigure4B = {
    {1, 0, 0, 1, 0, 2}, {0, 1, 0, 0, 1, 2}, {0, 0, 0, 1, 1, 2},
    {2, 0, 1, 0, 1, 2}, {0, 2, 1, 1, 0, 2}, {2, 2, 1, 1, 1, 1},
};

}  // namespace

TEST_CASE("the worked example reproduces the printed 6x6 weight matrix") {
  const auto p = GammaPartition::build(figure1());
  const auto q = quotient_matrix(p);
  REQUIRE(q.cells.size() == 6);
  CHECK(q.cells == std::vector<IndexSet>{J({1}), J({2}), J({3}), J({1, 3}), J({2, 3}),
                                         J({1, 2, 3})});
  CHECK(q.weights == kFigure4B);
}

TEST_CASE("degenerate quotients") {
  const auto single = quotient_matrix(GammaPartition::build(single_clique(5)));
  CHECK(single.weights == std::vector<std::vector<long long>>{{4}});

  const auto disjoint = quotient_matrix(GammaPartition::build(disjoint_pair()));
  CHECK(disjoint.weights == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
}

TEST_CASE("row sums equal the cell degrees") {
  const auto p = GammaPartition::build(figure1());
  const auto q = quotient_matrix(p);
  for (std::size_t i = 0; i < q.cells.size(); ++i) {
    long long sum = 0;
    for (long long w : q.weights[i]) sum += w;
    CHECK(sum == p.cell_degree(q.cells[i]));
  }
}

TEST_CASE("intersection rule agrees with the exact matrix product") {
  for (const auto& c : {figure1(), two_triangles(), disjoint_pair(), triangle_of_edges(),
                        single_clique(6)}) {
    const auto p = GammaPartition::build(c);
    const auto g = GraphUnion::from_collection(c);
    CHECK(quotient_matrix(p) == quotient_matrix_via_characteristic(p, g));
  }
}

TEST_CASE("characteristic matrix columns sum to gamma, rows to one") {
  const auto p = GammaPartition::build(figure1());
  const auto C = characteristic_matrix(p);
  REQUIRE(C.size() == 9);
  for (std::size_t j = 0; j < p.cells().size(); ++j) {
    int column = 0;
    for (const auto& row : C) column += row[j];
    CHECK(column == p.cells()[j].gamma());
  }
  for (const auto& row : C) {
    int ones = 0;
    for (int e : row) ones += e;
    CHECK(ones == 1);
  }
}

TEST_CASE("csv export uses the canonical header") {
  const auto q = quotient_matrix(GammaPartition::build(figure1()));
  const std::string csv = export_quotient(q, QuotientFormat::kCsv, {"A", "B", "C"});
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "A,B,C,AC,BC,ABC");
  std::string row;
  std::getline(lines, row);
  CHECK(row == "1,0,0,1,0,2");
  int rows = 1;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == 6);
}

TEST_CASE("json export carries cells and the weight matrix") {
  const auto q = quotient_matrix(GammaPartition::build(single_clique(5)));
  const auto doc = nlohmann::json::parse(export_quotient(q, QuotientFormat::kJson, {"1"}));
  CHECK(doc["cells"] == nlohmann::json::parse(R"([["1"]])"));
  CHECK(doc["B"] == nlohmann::json::parse("[[4]]"));
}

TEST_CASE("dot export emits one edge per nonzero off-diagonal weight") {
  const auto q = quotient_matrix(GammaPartition::build(figure1()));
  const std::string dot = export_quotient(q, QuotientFormat::kDot, {"A", "B", "C"});
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -> "); pos != std::string::npos;
       pos = dot.find(" -> ", pos + 1)) {
    ++edges;
  }
  long long nonzero_off_diagonal = 0;
  for (std::size_t i = 0; i < q.weights.size(); ++i) {
    for (std::size_t j = 0; j < q.weights.size(); ++j) {
      if (i != j && q.weights[i][j] != 0) ++nonzero_off_diagonal;
    }
  }
  CHECK(edges == static_cast<std::size_t>(nonzero_off_diagonal));
  CHECK(edges == 20);
  CHECK(dot.find("label=\"AC\"") != std::string::npos);
  CHECK(dot.find("weight=") != std::string::npos);

  CHECK_THROWS_AS(export_quotient(q, QuotientFormat::kDot, {"A"}), std::invalid_argument);
}

TEST_CASE("multi-character clique names join cell labels with plus") {
  const auto q = quotient_matrix(GammaPartition::build(figure1()));
  const std::string csv = export_quotient(q, QuotientFormat::kCsv, {"c1", "c2", "c3"});
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "c1,c2,c3,c1+c3,c2+c3,c1+c2+c3");
}

TEST_CASE("characteristic polynomials of small matrices") {
  CHECK(characteristic_polynomial({{2}}) == std::vector<BigInt>{-2, 1});
  // single edge: x^2 - 1
  CHECK(characteristic_polynomial({{0, 1}, {1, 0}}) == std::vector<BigInt>{-1, 0, 1});
  // triangle: x^3 - 3x - 2
  CHECK(characteristic_polynomial({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) ==
        std::vector<BigInt>{-2, -3, 0, 1});
  CHECK_THROWS_AS(characteristic_polynomial({{0, 1}}), std::invalid_argument);
}

TEST_CASE("the quotient spectrum is contained in the graph spectrum") {
  for (const auto& c : {figure1(), two_triangles(), disjoint_pair(), triangle_of_edges()}) {
    const auto p = GammaPartition::build(c);
    const auto g = GraphUnion::from_collection(c);
    const auto q = quotient_matrix(p);
    CHECK(spectral_containment_exact(q, g));
    CHECK(spectral_containment_numeric(q, g));
    CHECK(spectral_containment(q, g));
  }
}

TEST_CASE("a perturbed weight matrix fails containment") {
  const auto p = GammaPartition::build(figure1());
  const auto g = GraphUnion::from_collection(figure1());
  auto q = quotient_matrix(p);
  q.weights[0][0] += 1;
  CHECK_FALSE(spectral_containment_exact(q, g));
  CHECK_FALSE(spectral_containment_numeric(q, g));
}
