#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "decimation/errors.hpp"

namespace decimation {

/// Exact nonnegative counts; multiset coefficients leave 64 bits quickly.
using BigCount = boost::multiprecision::cpp_int;

/// Number of multisets of size k drawn from n kinds: C(n+k-1, k).
inline BigCount multiset_coeff(std::int64_t n, std::int64_t k) {
  if (k == 0) return 1;
  if (n <= 0 || k < 0) return 0;
  BigCount result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n + i - 1;
    result /= i;  // exact: result is C(n+i-1, i) after this step
  }
  return result;
}

/// Division that must be exact; a remainder means a bug upstream.
inline BigCount exact_div(const BigCount& num, const BigCount& den, const char* context) {
  if (den == 0) fail(ErrorCode::InternalConsistency, std::string(context) + ": division by zero");
  BigCount q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    fail(ErrorCode::InternalConsistency,
         std::string(context) + ": " + num.str() + " is not divisible by " + den.str());
  return q;
}

inline std::string to_decimal(const BigCount& c) { return c.str(); }

inline BigCount from_decimal(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::Parse, "not a decimal count: '" + s + "'");
  return BigCount(s);
}

}  // namespace decimation
