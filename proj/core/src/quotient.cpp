#include "cliquecover/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace cliquecover {

QuotientGraph quotient_matrix(const GammaPartition& p) {
  if (p.cells().empty()) {
    throw std::invalid_argument("quotient of an empty partition");
  }
  const auto& cells = p.cells();
  const std::size_t k = cells.size();
  QuotientGraph q;
  q.cells.reserve(k);
  for (const auto& cell : cells) q.cells.push_back(cell.J);
  q.weights.assign(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!cells[i].J.intersects(cells[j].J)) continue;
      q.weights[i][j] = cells[j].gamma() - (i == j ? 1 : 0);
    }
  }
  return q;
}

std::vector<std::vector<int>> characteristic_matrix(const GammaPartition& p) {
  const int n = p.node_count();
  const auto& cells = p.cells();
  std::vector<std::vector<int>> C(static_cast<std::size_t>(n),
                                  std::vector<int>(cells.size(), 0));
  for (std::size_t j = 0; j < cells.size(); ++j) {
    for (int x : cells[j].nodes) C[static_cast<std::size_t>(x)][j] = 1;
  }
  return C;
}

QuotientGraph quotient_matrix_via_characteristic(const GammaPartition& p,
                                                 const GraphUnion& g) {
  if (p.node_count() != g.node_count()) {
    throw std::invalid_argument("partition and graph disagree on node count");
  }
  const auto C = characteristic_matrix(p);
  const auto& cells = p.cells();
  const int n = p.node_count();
  const std::size_t k = cells.size();

  // M = C^T A C; entry (i, j) counts edges from cell i into cell j,
  // summed over the cell-i vertices.
  std::vector<std::vector<long long>> M(k, std::vector<long long>(k, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || !g.adjacent(u, v)) continue;
      std::size_t cu = 0;
      std::size_t cv = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (C[static_cast<std::size_t>(u)][c]) cu = c;
        if (C[static_cast<std::size_t>(v)][c]) cv = c;
      }
      ++M[cu][cv];
    }
  }

  QuotientGraph q;
  q.cells.reserve(k);
  for (const auto& cell : cells) q.cells.push_back(cell.J);
  q.weights.assign(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const long long gi = cells[i].gamma();
    for (std::size_t j = 0; j < k; ++j) {
      if (M[i][j] % gi != 0) {
        throw std::logic_error("partition is not equitable: inexact division");
      }
      q.weights[i][j] = M[i][j] / gi;
    }
  }
  return q;
}

namespace {

std::string cell_label(IndexSet J, const std::vector<std::string>& names) {
  bool all_single = true;
  for (const auto& name : names) all_single = all_single && name.size() == 1;
  std::string out;
  for (int j : J.indices()) {
    if (!out.empty() && !all_single) out += '+';
    out += names[static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<std::string> cell_labels(const QuotientGraph& q,
                                     const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(q.cells.size());
  for (IndexSet J : q.cells) out.push_back(cell_label(J, names));
  return out;
}

void check_names(const QuotientGraph& q, const std::vector<std::string>& names) {
  for (IndexSet J : q.cells) {
    for (int j : J.indices()) {
      if (j >= static_cast<int>(names.size())) {
        throw std::invalid_argument("fewer clique names than cliques");
      }
    }
  }
}

}  // namespace

std::string export_quotient(const QuotientGraph& q, QuotientFormat format,
                            const std::vector<std::string>& clique_names) {
  check_names(q, clique_names);
  const auto labels = cell_labels(q, clique_names);
  const std::size_t k = q.cells.size();

  switch (format) {
    case QuotientFormat::kJson: {
      nlohmann::json cells = nlohmann::json::array();
      for (IndexSet J : q.cells) {
        nlohmann::json names = nlohmann::json::array();
        for (int j : J.indices()) names.push_back(clique_names[static_cast<std::size_t>(j)]);
        cells.push_back(std::move(names));
      }
      nlohmann::json B = nlohmann::json::array();
      for (const auto& row : q.weights) B.push_back(row);
      return nlohmann::json{{"cells", std::move(cells)}, {"B", std::move(B)}}.dump();
    }
    case QuotientFormat::kCsv: {
      std::ostringstream out;
      for (std::size_t j = 0; j < k; ++j) {
        if (j > 0) out << ',';
        out << labels[j];
      }
      out << '\n';
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (j > 0) out << ',';
          out << q.weights[i][j];
        }
        out << '\n';
      }
      return out.str();
    }
    case QuotientFormat::kDot: {
      std::ostringstream out;
      out << "digraph quotient {\n";
      for (std::size_t i = 0; i < k; ++i) {
        out << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
      }
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (i == j || q.weights[i][j] == 0) continue;
          out << "  n" << i << " -> n" << j << " [label=" << q.weights[i][j]
              << ", weight=" << q.weights[i][j] << "];\n";
        }
      }
      out << "}\n";
      return out.str();
    }
  }
  throw std::invalid_argument("unknown quotient export format");
}

std::vector<BigInt> characteristic_polynomial(
    const std::vector<std::vector<long long>>& M) {
  const std::size_t n = M.size();
  for (const auto& row : M) {
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  }

  // Faddeev-LeVerrier: N_0 = I; c_{n-k} = -tr(M N_{k-1}) / k;
  // N_k = M N_{k-1} + c_{n-k} I. All divisions are exact over the integers.
  std::vector<BigInt> coeffs(n + 1);
  coeffs[n] = 1;
  std::vector<std::vector<BigInt>> N(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) N[i][i] = 1;

  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<BigInt>> MN(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (M[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          MN[i][j] += BigInt(M[i][l]) * N[l][j];
        }
      }
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += MN[i][i];
    if (trace % static_cast<long long>(k) != 0) {
      throw std::logic_error("characteristic polynomial: inexact trace division");
    }
    const BigInt ck = -trace / static_cast<long long>(k);
    coeffs[n - k] = ck;
    N = std::move(MN);
    for (std::size_t i = 0; i < n; ++i) N[i][i] += ck;
  }
  return coeffs;
}

namespace {

std::vector<std::vector<long long>> adjacency_matrix(const GraphUnion& g) {
  const int n = g.node_count();
  std::vector<std::vector<long long>> A(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.adjacent(u, v)) A[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    }
  }
  return A;
}

// Remainder of dividend / divisor where divisor is monic; true iff zero.
bool monic_divides(const std::vector<BigInt>& divisor,
                   const std::vector<BigInt>& dividend) {
  std::vector<BigInt> rem = dividend;
  const std::size_t d = divisor.size() - 1;
  while (rem.size() > d) {
    const BigInt lead = rem.back();
    if (lead != 0) {
      const std::size_t shift = rem.size() - 1 - d;
      for (std::size_t i = 0; i <= d; ++i) {
        rem[shift + i] -= lead * divisor[i];
      }
    }
    rem.pop_back();
  }
  return std::all_of(rem.begin(), rem.end(), [](const BigInt& c) { return c == 0; });
}

}  // namespace

bool spectral_containment_exact(const QuotientGraph& q, const GraphUnion& g) {
  const auto char_b = characteristic_polynomial(q.weights);
  const auto char_a = characteristic_polynomial(adjacency_matrix(g));
  return monic_divides(char_b, char_a);
}

bool spectral_containment_numeric(const QuotientGraph& q, const GraphUnion& g,
                                  double tol) {
  const int n = g.node_count();
  Eigen::MatrixXd A(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      A(u, v) = (u != v && g.adjacent(u, v)) ? 1.0 : 0.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a_solver(A);
  const Eigen::VectorXd a_eigs = a_solver.eigenvalues();

  const int k = static_cast<int>(q.cells.size());
  Eigen::MatrixXd B(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      B(i, j) = static_cast<double>(q.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> b_solver(B);
  for (int i = 0; i < k; ++i) {
    const std::complex<double> mu = b_solver.eigenvalues()(i);
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      best = std::min(best, std::abs(mu - std::complex<double>(a_eigs(j), 0.0)));
    }
    if (best > tol) return false;
  }
  return true;
}

bool spectral_containment(const QuotientGraph& q, const GraphUnion& g) {
  return g.node_count() <= 12 ? spectral_containment_exact(q, g)
                              : spectral_containment_numeric(q, g);
}

}  // namespace cliquecover
