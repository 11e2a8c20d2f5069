#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "decimation/big_count.hpp"
#include "decimation/errors.hpp"
#include "decimation/group.hpp"
#include "decimation/number_theory.hpp"
#include "decimation/orbits_counting.hpp"
#include "decimation/units_lattice.hpp"

namespace decimation {

inline void require_coprime_density(const Group& group, std::int64_t delta) {
  if (delta < 0) fail(ErrorCode::UnsupportedParameters, "density must be nonnegative");
  if (std::gcd(delta, group.exponent()) != 1)
    fail(ErrorCode::UnsupportedParameters, "gcd(density " + std::to_string(delta) + ", exponent " +
                                               std::to_string(group.exponent()) + ") != 1 for " + group.to_string());
}

/// Number of elements x with 2x = 0, i.e. prod gcd(2, l_i).
inline std::int64_t involution_count(const Group& group) {
  std::int64_t theta = 1;
  for (auto m : group.moduli()) theta *= std::gcd<std::int64_t>(2, m);
  return theta;
}

/// Necklaces of density delta: every one has exactly |G| members when gcd(delta, exponent) = 1.
inline BigCount necklace_count(const Group& group, std::int64_t delta) {
  require_coprime_density(group, delta);
  return exact_div(multiset_coeff(group.order(), delta), group.order(), "necklace count");
}

/// Density-delta vectors with v(k) = v(-k) for all k:
///   sum over delta1 + 2*delta2 = delta of
///     multiset_coeff((l - theta)/2, delta2) * multiset_coeff(theta, delta1).
/// The theta self-inverse positions are free; the rest pair up with their negatives.
inline BigCount symmetric_vectors_about_zero(const Group& group, std::int64_t delta) {
  if (delta < 0) return 0;
  const std::int64_t theta = involution_count(group);
  const std::int64_t pairs = (group.order() - theta) / 2;
  BigCount total = 0;
  for (std::int64_t d2 = 0; 2 * d2 <= delta; ++d2) total += multiset_coeff(pairs, d2) * multiset_coeff(theta, delta - 2 * d2);
  return total;
}

/// Symmetric necklaces of density delta.
///
/// A symmetric non-periodic necklace holds |G| vectors with theta centres of
/// symmetry each, so exactly theta of its members are symmetric about 0.
/// For odd order theta = 1 and the count is the sum itself.
inline BigCount symmetric_necklace_count(const Group& group, std::int64_t delta) {
  if (delta == 0) return 1;
  require_coprime_density(group, delta);
  return exact_div(symmetric_vectors_about_zero(group, delta), involution_count(group), "symmetric necklace count");
}

/// Closed form for odd cyclic groups: multiset_coeff((l+1)/2, floor(delta/2)).
/// The centre absorbs any delta1 of the parity of delta and the (l-1)/2
/// mirrored pairs take delta2 <= floor(delta/2); summing over delta2 telescopes.
inline BigCount cyclic_symmetric_necklace_count(const Group& group, std::int64_t delta) {
  if (!group.is_cyclic()) fail(ErrorCode::NotCyclic, group.to_string() + " is not cyclic");
  if (group.order() % 2 == 0) fail(ErrorCode::UnsupportedParameters, "closed form needs odd order");
  if (delta == 0) return 1;
  require_coprime_density(group, delta);
  return multiset_coeff((group.order() + 1) / 2, delta / 2);
}

/// A bracelet holds one necklace if it is symmetric and two otherwise.
inline BigCount bracelet_count(const Group& group, std::int64_t delta) {
  require_coprime_density(group, delta);
  return exact_div(necklace_count(group, delta) + symmetric_necklace_count(group, delta), 2, "bracelet count");
}

/// One row per subgroup H of Z_exponent^x.
///
/// nsol counts density-delta multisets fixed by H; n_prime the necklaces whose
/// multiplier group contains H; n those whose multiplier group is exactly H;
/// num_d the decimation classes with multiplier group H.
struct SubgroupRow {
  std::vector<std::int64_t> generators;
  std::vector<std::int64_t> elements;
  std::int64_t c = 0;
  BigCount nsol = 0;
  BigCount n_prime = 0;
  BigCount n = 0;
  BigCount num_d = 0;

  std::size_t order() const noexcept { return elements.size(); }
};

struct CountReport {
  std::string group;
  std::vector<std::int64_t> moduli;
  std::int64_t order = 0;
  std::int64_t exponent = 0;
  std::int64_t delta = 0;
  BigCount necklaces = 0;
  BigCount symmetric_necklaces = 0;
  BigCount bracelets = 0;
  BigCount decimation_classes = 0;
  std::vector<SubgroupRow> per_subgroup;
  std::vector<std::string> warnings;
};

struct CountOptions {
  unsigned threads = 1;
};

namespace detail {

inline void fill_fixed_counts(const Group& group, std::int64_t delta, const UnitSubgroup& h, SubgroupRow& row) {
  const auto profile = h_orbits(group, h);
  row.nsol = usp_count(profile, delta);
  BigCount duplicates = 1;
  for (auto m : group.moduli()) duplicates *= std::gcd(row.c, m);
  row.n_prime = exact_div(row.nsol, duplicates, "fixed multisets per necklace");
}

}  // namespace detail

/// Counts decimation classes of density-delta vectors over `group`.
///
/// For each subgroup H its H-orbits give the fixed multisets (nsol), which
/// over-count necklaces by the prod gcd(C, l_i) translates fixed by H. The
/// resulting "contains H" counts are turned into "exactly H" counts top-down
/// over the lattice, and each class with multiplier group H contains
/// phi(exponent)/|H| necklaces.
inline CountReport count_decimation_classes(const Group& group, std::int64_t delta, const CountOptions& options = {}) {
  require_coprime_density(group, delta);
  CountReport report;
  report.group = group.to_string();
  report.moduli = group.moduli();
  report.order = group.order();
  report.exponent = group.exponent();
  report.delta = delta;
  if (group.order() % 2 == 0)
    report.warnings.push_back("group order " + std::to_string(group.order()) +
                              " is even; the method is stated for odd order, results rely on gcd(density, exponent) = 1 only");

  const auto lattice = subgroup_lattice(group.exponent());
  const auto phi = static_cast<std::int64_t>(units(group.exponent()).size());

  auto& rows = report.per_subgroup;
  rows.resize(lattice.nodes.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].generators = lattice.nodes[i].generators();
    rows[i].elements = lattice.nodes[i].elements();
    rows[i].c = c_value(rows[i].generators, group.exponent());
  }

  // Rows are independent until the discount pass.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        if (lattice.nodes[i].is_trivial()) {
          rows[i].nsol = multiset_coeff(group.order(), delta);
          rows[i].n_prime = exact_div(rows[i].nsol, group.order(), "necklaces with trivial multiplier subgroup");
        } else {
          detail::fill_fixed_counts(group, delta, lattice.nodes[i], rows[i]);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(rows.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  // Descending |H|; ties by element list.
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rows[a].order() != rows[b].order()) return rows[a].order() > rows[b].order();
    return rows[a].elements < rows[b].elements;
  });
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    auto& row = rows[order[pos]];
    BigCount n = row.n_prime;
    for (std::size_t prior = 0; prior < pos; ++prior) {
      const auto& bigger = lattice.nodes[order[prior]];
      if (lattice.nodes[order[pos]].is_proper_subgroup_of(bigger)) n -= rows[order[prior]].n;
    }
    if (n < 0)
      fail(ErrorCode::InternalConsistency, "negative necklace count for subgroup of order " + std::to_string(row.order()));
    row.n = n;
    row.num_d = exact_div(row.n * static_cast<std::int64_t>(row.order()), phi, "decimation classes per subgroup");
    report.decimation_classes += row.num_d;
  }

  report.necklaces = necklace_count(group, delta);
  report.symmetric_necklaces = symmetric_necklace_count(group, delta);
  report.bracelets = bracelet_count(group, delta);

  BigCount partition = 0;
  for (const auto& row : rows) partition += row.n;
  if (partition != report.necklaces)
    fail(ErrorCode::InternalConsistency, "per-subgroup necklace counts sum to " + partition.str() + ", expected " +
                                             report.necklaces.str());
  return report;
}

}  // namespace decimation
