#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "decimation/errors.hpp"
#include "decimation/group.hpp"
#include "decimation/multiset.hpp"
#include "decimation/number_theory.hpp"
#include "decimation/units_lattice.hpp"

namespace decimation {

/// Evidence that t is a multiplier: tI = I + g0.
///
/// The j-tuple locates g0 among the prod gcd(delta, l_k) solutions of
/// delta*g = (t-1)*sigma. Per coordinate, with d = gcd(delta, l_k),
///   g0_k = b_k * (t-1)*sigma_k / d + (l_k/d) * j_k   (mod l_k),
/// where (t-1)*sigma_k is reduced mod l_k, b_k is the inverse of delta/d
/// modulo l_k/d (1 when d = l_k) and 0 <= j_k < d.
struct MultiplierWitness {
  std::int64_t t = 1;
  GroupElement g0;
  std::vector<std::int64_t> j;
};

namespace detail {

inline std::int64_t witness_base(std::int64_t delta, std::int64_t lk, std::int64_t t, std::int64_t sigma_k) {
  const std::int64_t d = std::gcd(delta, lk);
  const std::int64_t step = lk / d;
  const std::int64_t b = step == 1 ? 1 : nt::mod_inverse(delta / d, step);
  const std::int64_t numer = nt::mul_mod(t - 1, sigma_k, lk);
  // d divides (t-1)*sigma_k modulo l_k when a witness exists.
  return nt::mul_mod(b, numer / d, lk);
}

inline bool translate_matches(const GroupMultiset& dilated, const GroupMultiset& original, std::size_t shift) {
  const auto& g = original.group();
  for (std::size_t i = 0; i < g.size(); ++i)
    if (dilated.multiplicity(g.add(i, shift)) != original.multiplicity(i)) return false;
  return true;
}

/// Any g with tI = I + g; the candidates are the solutions of delta*g = (t-1)*sigma.
inline std::optional<GroupElement> any_witness(const GroupMultiset& multiset, std::int64_t t) {
  const auto& g = multiset.group();
  const auto dilated = dilate(multiset, t);
  const auto rhs = g.element(g.scale(t - 1, multiset.sigma_index()));
  for (const auto& candidate : solve_linear(g, multiset.density(), rhs))
    if (translate_matches(dilated, multiset, candidate.index())) return candidate;
  return std::nullopt;
}

inline void require_non_periodic(const GroupMultiset& multiset) {
  if (auto p = is_periodic(multiset))
    fail(ErrorCode::PeriodicInput, "multiset " + multiset.to_string() + " has period " + p->to_string());
}

}  // namespace detail

/// The unique g0 with tI = I + g0 and its j-tuple, or nothing when t is not a
/// multiplier. Needs a non-periodic I.
inline std::optional<MultiplierWitness> translate_witness(const GroupMultiset& multiset, std::int64_t t) {
  const auto& g = multiset.group();
  require_unit(t, g.exponent());
  detail::require_non_periodic(multiset);
  t = nt::mod(t, g.exponent());
  auto g0 = detail::any_witness(multiset, t);
  if (!g0) return std::nullopt;
  MultiplierWitness w{t, *g0, {}};
  for (std::size_t k = 0; k < g.rank(); ++k) {
    const std::int64_t lk = g.moduli()[k];
    const std::int64_t d = std::gcd(multiset.density(), lk);
    const std::int64_t base = detail::witness_base(multiset.density(), lk, t, multiset.sigma().residue(k));
    const std::int64_t offset = nt::mod(g0->residue(k) - base, lk);
    if (offset % (lk / d) != 0)
      fail(ErrorCode::InternalConsistency, "witness offset is not a multiple of l_k/d_k");
    w.j.push_back(offset / (lk / d));
  }
  return w;
}

/// Rebuilds g0 from a j-tuple.
inline GroupElement witness_from_j(const GroupMultiset& multiset, std::int64_t t, const std::vector<std::int64_t>& j) {
  const auto& g = multiset.group();
  std::vector<std::int64_t> residues(g.rank());
  for (std::size_t k = 0; k < g.rank(); ++k) {
    const std::int64_t lk = g.moduli()[k];
    const std::int64_t d = std::gcd(multiset.density(), lk);
    residues[k] = detail::witness_base(multiset.density(), lk, t, multiset.sigma().residue(k)) + lk / d * j[k];
  }
  return g.element(g.index_of(residues));
}

inline bool is_multiplier(const GroupMultiset& multiset, std::int64_t t) {
  require_unit(t, multiset.group().exponent());
  return detail::any_witness(multiset, t).has_value();
}

/// H = {t : tI = I + g for some g} as a UnitSubgroup with a greedy generating set.
///
/// With gcd(delta, exponent) = 1 one translate I + z0 is fixed by all of H,
/// so membership is a single comparison per unit. Otherwise each unit is
/// tested against the candidate witnesses.
inline UnitSubgroup multiplier_group(const GroupMultiset& multiset) {
  if (multiset.empty()) fail(ErrorCode::EmptyMultiset, "multiplier group of the empty multiset");
  const auto& g = multiset.group();
  const std::int64_t exponent = g.exponent();
  std::vector<std::int64_t> members;
  if (std::gcd(multiset.density(), exponent) == 1) {
    const auto fixed = translate(multiset, canonical_shift(multiset));
    for (auto t : units(exponent))
      if (dilate(fixed, t) == fixed) members.push_back(t);
  } else {
    for (auto t : units(exponent))
      if (detail::any_witness(multiset, t)) members.push_back(t);
  }
  UnitSubgroup h(exponent, greedy_generators(members, exponent));
  if (h.elements() != members)
    fail(ErrorCode::InternalConsistency, "multiplier set is not closed under multiplication");
  return h;
}

namespace detail {

inline MultiplierWitness require_witness(const GroupMultiset& multiset, std::int64_t t) {
  auto w = translate_witness(multiset, t);
  if (!w) fail(ErrorCode::NotAMultiplier, std::to_string(t) + " is not a multiplier of " + multiset.to_string());
  return *w;
}

}  // namespace detail

/// All z with t(I + z) = I + z, i.e. the solutions of (t-1)z = -g0.
inline std::vector<GroupElement> fixed_translates(const GroupMultiset& multiset, std::int64_t t) {
  const auto w = detail::require_witness(multiset, t);
  return solve_linear(multiset.group(), w.t - 1, neg(w.g0));
}

/// Whether some translate of I is fixed by t, decided by the divisibility
///   d_k * gcd(t-1, l_k) | b_k*(t-1)*sigma_k + l_k*j_k(t)   for every k,
/// with b_k and the reduced product (t-1)*sigma_k mod l_k exactly as used to
/// define j_k(t).
inline bool is_translate_fixing(const GroupMultiset& multiset, std::int64_t t) {
  const auto w = detail::require_witness(multiset, t);
  const auto& g = multiset.group();
  for (std::size_t k = 0; k < g.rank(); ++k) {
    const std::int64_t lk = g.moduli()[k];
    const std::int64_t d = std::gcd(multiset.density(), lk);
    const std::int64_t step = lk / d;
    const std::int64_t b = step == 1 ? 1 : nt::mod_inverse(multiset.density() / d, step);
    const std::int64_t divisor = d * std::gcd(w.t - 1, lk);
    const std::int64_t value = b * nt::mul_mod(w.t - 1, multiset.sigma().residue(k), lk) + lk * w.j[k];
    if (value % divisor != 0) return false;
  }
  return true;
}

/// Translates fixed by every element of <gens>: the intersection of the
/// per-generator solution sets. Empty `gens` means <1>, which fixes all of G.
inline std::vector<GroupElement> subgroup_fixed_translates(const GroupMultiset& multiset,
                                                           const std::vector<std::int64_t>& gens) {
  std::vector<GroupElement> current = multiset.group().elements();
  for (auto t : gens) {
    const auto fixed = fixed_translates(multiset, t);
    std::vector<GroupElement> kept;
    std::set_intersection(current.begin(), current.end(), fixed.begin(), fixed.end(), std::back_inserter(kept),
                          [](const GroupElement& a, const GroupElement& b) { return a.index() < b.index(); });
    current = std::move(kept);
  }
  return current;
}

}  // namespace decimation
