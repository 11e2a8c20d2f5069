#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "decimation/errors.hpp"
#include "decimation/number_theory.hpp"

namespace decimation {

/// Ascending list of the units of Z_modulus.
inline std::vector<std::int64_t> units(std::int64_t modulus) {
  if (modulus < 2) fail(ErrorCode::UnsupportedParameters, "unit group modulus must be at least 2");
  std::vector<std::int64_t> out;
  for (std::int64_t u = 1; u < modulus; ++u)
    if (std::gcd(u, modulus) == 1) out.push_back(u);
  return out;
}

/// Sorted closure of `generators` under multiplication mod `modulus`; always contains 1.
inline std::vector<std::int64_t> generated_elements(const std::vector<std::int64_t>& generators,
                                                    std::int64_t modulus) {
  std::vector<char> seen(static_cast<std::size_t>(modulus), 0);
  std::vector<std::int64_t> frontier{1};
  seen[1] = 1;
  std::vector<std::int64_t> all{1};
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (auto g : generators) {
      const auto y = nt::mul_mod(x, g, modulus);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        frontier.push_back(y);
        all.push_back(y);
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

/// A subgroup of Z_modulus^x with the generating set it was built from.
class UnitSubgroup {
 public:
  UnitSubgroup(std::int64_t modulus, std::vector<std::int64_t> generators)
      : modulus_(modulus), generators_(std::move(generators)) {
    for (auto& g : generators_) {
      g = nt::mod(g, modulus_);
      if (std::gcd(g, modulus_) != 1)
        fail(ErrorCode::NotAUnit, std::to_string(g) + " is not a unit mod " + std::to_string(modulus_));
    }
    if (generators_.empty()) generators_.push_back(1);
    elements_ = generated_elements(generators_, modulus_);
  }

  static UnitSubgroup trivial(std::int64_t modulus) { return UnitSubgroup(modulus, {1}); }
  static UnitSubgroup whole(std::int64_t modulus);

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }

  bool contains(std::int64_t t) const {
    return std::binary_search(elements_.begin(), elements_.end(), nt::mod(t, modulus_));
  }

  /// Proper or equal containment of element sets.
  bool is_subgroup_of(const UnitSubgroup& other) const {
    return modulus_ == other.modulus_ &&
           std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
  }
  bool is_proper_subgroup_of(const UnitSubgroup& other) const {
    return order() < other.order() && is_subgroup_of(other);
  }

  friend bool operator==(const UnitSubgroup& a, const UnitSubgroup& b) noexcept {
    return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
  }

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> elements_;
};

/// Greedy generating set: walk the elements in ascending order and keep an
/// element only if the ones kept so far do not already generate it.
inline std::vector<std::int64_t> greedy_generators(const std::vector<std::int64_t>& elements, std::int64_t modulus) {
  std::vector<std::int64_t> gens;
  std::vector<std::int64_t> span{1};
  for (auto e : elements) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    span = generated_elements(gens, modulus);
  }
  if (gens.empty()) gens.push_back(1);
  return gens;
}

inline UnitSubgroup UnitSubgroup::whole(std::int64_t modulus) {
  return UnitSubgroup(modulus, greedy_generators(units(modulus), modulus));
}

/// C = gcd({g - 1 : g in gens} U {modulus}).
inline std::int64_t c_value(const std::vector<std::int64_t>& gens, std::int64_t modulus) {
  std::int64_t c = modulus;
  for (auto g : gens) c = std::gcd(c, nt::mod(g - 1, modulus));
  return c;
}

/// All subgroups of Z_modulus^x with the maximal-subgroup relation.
///
/// `edges` holds (J, K) node-index pairs where K is a maximal subgroup of J.
/// Nodes are sorted by (order, element list) so node 0 is <1> and the last
/// node is the full unit group.
struct SubgroupLattice {
  std::int64_t modulus = 0;
  std::vector<UnitSubgroup> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t index_of(const UnitSubgroup& h) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i] == h) return i;
    fail(ErrorCode::InternalConsistency, "subgroup not present in the lattice");
  }

  /// Parents of node i (the groups of which node i is a maximal subgroup).
  std::vector<std::size_t> covers_of(std::size_t i) const {
    std::vector<std::size_t> out;
    for (const auto& [j, k] : edges)
      if (k == i) out.push_back(j);
    return out;
  }
};

namespace detail {

struct ElementsHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

/// Interim lattice maintained under insertion; edge (J, K) means K is
/// maximal in J among the nodes inserted so far.
class InterimLattice {
 public:
  bool contains(const std::vector<std::int64_t>& elements) const { return index_.count(elements) > 0; }

  void insert(UnitSubgroup group) {
    const std::size_t fresh = nodes_.size();
    index_.emplace(group.elements(), fresh);
    nodes_.push_back(std::move(group));
    const auto& l = nodes_.back();

    std::vector<std::size_t> below, above;
    for (std::size_t i = 0; i < fresh; ++i) {
      const auto& n = nodes_[i];
      if (l.order() % n.order() == 0 && n.is_proper_subgroup_of(l)) below.push_back(i);
      if (n.order() % l.order() == 0 && l.is_proper_subgroup_of(n)) above.push_back(i);
    }
    // Edges J -> K with K < L < J are no longer maximal.
    std::erase_if(edges_, [&](const auto& e) {
      return std::find(above.begin(), above.end(), e.first) != above.end() &&
             std::find(below.begin(), below.end(), e.second) != below.end();
    });
    for (auto k : below) {
      const bool maximal = std::none_of(below.begin(), below.end(), [&](std::size_t other) {
        return other != k && nodes_[k].is_proper_subgroup_of(nodes_[other]);
      });
      if (maximal) edges_.emplace_back(fresh, k);
    }
    for (auto j : above) {
      const bool minimal = std::none_of(above.begin(), above.end(), [&](std::size_t other) {
        return other != j && nodes_[other].is_proper_subgroup_of(nodes_[j]);
      });
      if (minimal) edges_.emplace_back(j, fresh);
    }
  }

  const std::vector<UnitSubgroup>& nodes() const noexcept { return nodes_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

 private:
  std::vector<UnitSubgroup> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, ElementsHash> index_;
};

}  // namespace detail

/// Builds every subgroup of Z_modulus^x by cyclic extension.
///
/// Level 1 holds the distinct cyclic subgroups <u>. Level i+1 joins each
/// level-i subgroup with each cyclic subgroup; joins already present are
/// discarded. Every subgroup needs at most rank(Z_modulus^x) generators, so
/// the search stops at that depth and each node keeps the generating set
/// of the join that first produced it.
inline SubgroupLattice subgroup_lattice(std::int64_t modulus) {
  const auto all_units = units(modulus);
  const int depth = std::max(1, nt::unit_group_rank(modulus));

  detail::InterimLattice lattice;
  lattice.insert(UnitSubgroup::trivial(modulus));

  std::vector<UnitSubgroup> cyclic;
  for (auto u : all_units) {
    UnitSubgroup c(modulus, {u});
    if (lattice.contains(c.elements())) continue;
    cyclic.push_back(c);
    lattice.insert(std::move(c));
  }

  std::vector<UnitSubgroup> level = cyclic;
  for (int d = 2; d <= depth && !level.empty(); ++d) {
    std::vector<UnitSubgroup> next;
    for (const auto& h : level) {
      for (const auto& c : cyclic) {
        if (c.is_subgroup_of(h)) continue;
        auto gens = h.generators();
        gens.push_back(c.generators().front());
        UnitSubgroup joined(modulus, std::move(gens));
        if (lattice.contains(joined.elements())) continue;
        next.push_back(joined);
        lattice.insert(std::move(joined));
      }
    }
    level = std::move(next);
  }

  // Canonical node order: ascending order, then element list.
  const auto& interim = lattice.nodes();
  std::vector<std::size_t> perm(interim.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (interim[a].order() != interim[b].order()) return interim[a].order() < interim[b].order();
    return interim[a].elements() < interim[b].elements();
  });
  std::vector<std::size_t> where(interim.size());
  SubgroupLattice out;
  out.modulus = modulus;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    where[perm[i]] = i;
    out.nodes.push_back(interim[perm[i]]);
  }
  for (const auto& [j, k] : lattice.edges()) out.edges.emplace_back(where[j], where[k]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace decimation
