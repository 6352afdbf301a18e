#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cliquecover {

// Counting results overflow 64 bits even for modest inputs (2^gamma terms,
// products of binomials), so every count is an exact big integer.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(a, b); zero when b < 0 or b > a.
BigInt binomial(long long a, long long b);

// 2^e, e >= 0.
BigInt pow2(long long e);

}  // namespace cliquecover
