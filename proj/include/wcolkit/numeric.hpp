#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "wcolkit/error.hpp"

namespace wcolkit {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k) for arbitrary-precision n; zero when k > n.
inline BigInt binomial(const BigInt& n, long long k) {
  if (k < 0 || n < 0) throw Error("precondition-violated", "binomial with negative argument");
  if (BigInt(k) > n) return 0;
  if (BigInt(2 * k) > n) {
    const BigInt other = n - k;
    if (other < k) return binomial(n, static_cast<long long>(other));
  }
  BigInt result = 1;
  for (long long i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

inline BigInt power(const BigInt& base, unsigned long long exponent) {
  BigInt result = 1;
  for (unsigned long long i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace wcolkit
