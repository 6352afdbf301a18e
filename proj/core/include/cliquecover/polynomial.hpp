#pragma once

#include <vector>

#include "cliquecover/numeric.hpp"

namespace cliquecover {

// Dense univariate polynomial with big-integer coefficients, index = degree.
// Trailing zero coefficients are trimmed; the zero polynomial stores nothing.
class CountPolynomial {
 public:
  CountPolynomial() = default;
  explicit CountPolynomial(std::vector<BigInt> coefficients);

  static CountPolynomial one();

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  // Zero beyond the stored degree.
  const BigInt& coefficient(int k) const;
  const std::vector<BigInt>& coefficients() const { return coefficients_; }

  BigInt evaluate(const BigInt& x) const;

  CountPolynomial& operator+=(const CountPolynomial& other);
  friend CountPolynomial operator+(CountPolynomial a, const CountPolynomial& b) {
    a += b;
    return a;
  }
  friend CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b);
  friend bool operator==(const CountPolynomial&, const CountPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

// (1+x)^gamma - 1: coefficient k counts the k-subsets of a gamma-cell, k >= 1.
CountPolynomial nonempty_subset_series(int gamma);

}  // namespace cliquecover
