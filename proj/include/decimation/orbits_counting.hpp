#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "decimation/big_count.hpp"
#include "decimation/errors.hpp"
#include "decimation/group.hpp"
#include "decimation/units_lattice.hpp"

namespace decimation {

/// Partition of G into H-orbits {t*s : t in H}.
///
/// `orbits` are listed by least canonical index, each sorted; `sizes[i]` is
/// |orbits[i]|; `q` holds the distinct sizes ascending and `r[j]` how many
/// orbits have size q[j].
struct OrbitProfile {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::int64_t> sizes;
  std::vector<std::int64_t> q;
  std::vector<std::int64_t> r;
};

inline OrbitProfile h_orbits(const Group& group, const UnitSubgroup& h) {
  if (h.modulus() != group.exponent())
    fail(ErrorCode::GroupMismatch, "subgroup of Z_" + std::to_string(h.modulus()) + "^x acting on " +
                                       group.to_string() + " with exponent " + std::to_string(group.exponent()));
  OrbitProfile out;
  std::vector<char> seen(group.size(), 0);
  for (std::size_t s = 0; s < group.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> orbit;
    for (auto t : h.elements()) {
      const auto x = group.scale(t, s);
      if (!seen[x]) {
        seen[x] = 1;
        orbit.push_back(x);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.sizes.push_back(static_cast<std::int64_t>(orbit.size()));
    out.orbits.push_back(std::move(orbit));
  }
  auto f = out.sizes;
  std::sort(f.begin(), f.end());
  for (auto a : f) {
    if (out.q.empty() || out.q.back() != a) {
      out.q.push_back(a);
      out.r.push_back(0);
    }
    ++out.r.back();
  }
  return out;
}

/// Number of nonnegative solutions of sum_i a_i x_i = delta where the
/// coefficient list has r[j] copies of q[j]:
///
///   sum over (j_0..j_{m-1}) with sum j_i q_i = delta of prod multiset_coeff(r_i, j_i).
///
/// Computed as a table over (size index k, residual mu), filled from the last
/// size backwards; ways[mu] after step k counts the ways sizes k..m-1 reach mu.
inline BigCount usp_count(const std::vector<std::int64_t>& q, const std::vector<std::int64_t>& r, std::int64_t delta) {
  if (q.size() != r.size()) fail(ErrorCode::UnsupportedParameters, "q and r differ in length");
  if (delta < 0) return 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0 || r[i] <= 0) fail(ErrorCode::UnsupportedParameters, "orbit sizes and duplicities must be positive");
    if (i > 0 && q[i] <= q[i - 1]) fail(ErrorCode::UnsupportedParameters, "orbit sizes must be strictly ascending");
  }
  const auto width = static_cast<std::size_t>(delta) + 1;
  std::vector<BigCount> ways(width, 0);
  ways[0] = 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    std::vector<BigCount> next(width, 0);
    const std::int64_t jmax = delta / q[k];
    std::vector<BigCount> coeff(static_cast<std::size_t>(jmax) + 1);
    for (std::int64_t j = 0; j <= jmax; ++j) coeff[static_cast<std::size_t>(j)] = multiset_coeff(r[k], j);
    for (std::int64_t mu = 0; mu <= delta; ++mu) {
      BigCount total = 0;
      for (std::int64_t j = 0; j * q[k] <= mu; ++j) {
        const auto& rest = ways[static_cast<std::size_t>(mu - j * q[k])];
        if (rest != 0) total += coeff[static_cast<std::size_t>(j)] * rest;
      }
      next[static_cast<std::size_t>(mu)] = std::move(total);
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(delta)];
}

inline BigCount usp_count(const OrbitProfile& profile, std::int64_t delta) {
  return usp_count(profile.q, profile.r, delta);
}

}  // namespace decimation
