#pragma once

#include <string>
#include <vector>

#include "cliquecover/collection.hpp"
#include "cliquecover/numeric.hpp"
#include "cliquecover/partition.hpp"

namespace cliquecover {

// Weighted quotient of the graph union modulo the gamma partition: one
// node per non-empty cell, weight b_IJ = number of neighbours in cell J
// of every vertex of cell I.
struct QuotientGraph {
  std::vector<IndexSet> cells;                  // canonical order
  std::vector<std::vector<long long>> weights;  // B, row I col J

  friend bool operator==(const QuotientGraph&, const QuotientGraph&) = default;
};

// B from the intersection rule: b_IJ = gamma_J when I and J intersect
// (minus one on the diagonal), zero otherwise.
QuotientGraph quotient_matrix(const GammaPartition& p);

// 0/1 matrix with entry (i, J) = 1 iff node i lies in cell J; columns in
// canonical cell order. Column sums are the gamma values and each row has
// exactly one 1.
std::vector<std::vector<int>> characteristic_matrix(const GammaPartition& p);

// Verification route: B = (C^T C)^{-1} C^T A C evaluated exactly (C^T C is
// diagonal with the gamma values, so the division is exact). Throws if a
// division is not exact, which would mean the partition is not equitable.
QuotientGraph quotient_matrix_via_characteristic(const GammaPartition& p,
                                                 const GraphUnion& g);

enum class QuotientFormat { kJson, kDot, kCsv };

// Deterministic text export in canonical cell order. Cell labels come from
// the per-clique names (joined directly when all names are single
// characters, with '+' otherwise). DOT output is a digraph with one edge
// per nonzero off-diagonal weight.
std::string export_quotient(const QuotientGraph& q, QuotientFormat format,
                            const std::vector<std::string>& clique_names);

// det(xI - M) with exact integer arithmetic, coefficients ascending by
// degree (Faddeev-LeVerrier).
std::vector<BigInt> characteristic_polynomial(
    const std::vector<std::vector<long long>>& M);

// Exact containment of B's spectrum in A's: the characteristic polynomial
// of B divides that of A over the integers.
bool spectral_containment_exact(const QuotientGraph& q, const GraphUnion& g);

// Numeric containment: every eigenvalue of B lies within tol of some
// eigenvalue of A.
bool spectral_containment_numeric(const QuotientGraph& q, const GraphUnion& g,
                                  double tol = 1e-8);

// Exact path for n <= 12, numeric beyond.
bool spectral_containment(const QuotientGraph& q, const GraphUnion& g);

}  // namespace cliquecover
