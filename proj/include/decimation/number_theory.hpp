#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "decimation/errors.hpp"

namespace decimation::nt {

/// Least nonnegative residue of a mod m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

struct ExtendedGcd {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};

/// g = gcd(a, b) >= 0 with a*x + b*y = g.
constexpr ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) noexcept {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo m; m == 1 yields 0. Throws NotAUnit when gcd(a, m) != 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  const auto e = extended_gcd(mod(a, m), m);
  if (e.g != 1) fail(ErrorCode::NotAUnit, std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return mod(e.x, m);
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept {
  return static_cast<std::int64_t>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

/// Prime factorisation as (prime, exponent) pairs in ascending prime order.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

/// Orders of the cyclic factors of Z_n^x obtained from the prime-power
/// decomposition (not yet merged into invariant factors).
inline std::vector<std::int64_t> unit_group_cyclic_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& [p, e] : factorize(n)) {
    std::int64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 2) out.push_back(2);
      if (e >= 3) {
        out.push_back(2);
        out.push_back(pe / 4);
      }
    } else {
      out.push_back(pe / p * (p - 1));
    }
  }
  return out;
}

/// Number of invariant factors of Z_n^x, i.e. the minimum size of a
/// generating set: the largest p-rank over all primes p.
inline int unit_group_rank(std::int64_t n) {
  const auto factors = unit_group_cyclic_factors(n);
  std::vector<std::int64_t> primes;
  for (auto f : factors)
    for (const auto& [p, e] : factorize(f)) primes.push_back(p);
  int rank = 0;
  for (auto p : primes) {
    int count = 0;
    for (auto f : factors)
      if (f % p == 0) ++count;
    rank = std::max(rank, count);
  }
  return rank;
}

}  // namespace decimation::nt
