#include "cliquecover/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliquecover {

BigInt binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: the running value is C(a-b+i, i)
  }
  return result;
}

BigInt pow2(long long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return BigInt(1) << static_cast<unsigned>(e);
}

}  // namespace cliquecover
