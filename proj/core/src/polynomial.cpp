#include "cliquecover/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace cliquecover {

namespace {
const BigInt kZero = 0;
}

CountPolynomial::CountPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

CountPolynomial CountPolynomial::one() { return CountPolynomial({BigInt(1)}); }

const BigInt& CountPolynomial::coefficient(int k) const {
  if (k < 0) throw std::out_of_range("CountPolynomial: negative degree");
  if (k >= static_cast<int>(coefficients_.size())) return kZero;
  return coefficients_[static_cast<std::size_t>(k)];
}

BigInt CountPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

CountPolynomial& CountPolynomial::operator+=(const CountPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  trim();
  return *this;
}

CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> prod(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      prod[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return CountPolynomial(std::move(prod));
}

void CountPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

CountPolynomial nonempty_subset_series(int gamma) {
  if (gamma < 0) throw std::invalid_argument("nonempty_subset_series: negative size");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(gamma) + 1);
  for (int k = 1; k <= gamma; ++k) {
    coeffs[static_cast<std::size_t>(k)] = binomial(gamma, k);
  }
  return CountPolynomial(std::move(coeffs));
}

}  // namespace cliquecover
