#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "decimation/big_count.hpp"
#include "decimation/errors.hpp"
#include "decimation/group.hpp"
#include "decimation/multiset.hpp"

// Exhaustive ground truth. Nothing here may use the counting formulas, the
// orbit/USP machinery or the subgroup lattice.

namespace decimation::oracle {

using Vector = std::vector<std::int64_t>;

/// Walks every density-delta vector over G in descending lexicographic order,
/// starting from (delta, 0, ..., 0).
class MultisetEnumerator {
 public:
  MultisetEnumerator(const Group& group, std::int64_t delta) : current_(group.size(), 0) {
    if (delta < 0) fail(ErrorCode::UnsupportedParameters, "density must be nonnegative");
    current_[0] = delta;
  }

  /// Copies the next vector into `out`; false once exhausted.
  bool next(Vector& out) {
    if (done_) return false;
    out = current_;
    advance();
    return true;
  }

 private:
  void advance() {
    const std::size_t n = current_.size();
    std::size_t i = n - 1;
    while (i-- > 0)
      if (current_[i] > 0) break;
    if (i == static_cast<std::size_t>(-1) || n == 1) {
      done_ = true;
      return;
    }
    const auto tail = current_[n - 1];
    current_[n - 1] = 0;
    --current_[i];
    current_[i + 1] = tail + 1;
  }

  Vector current_;
  bool done_ = false;
};

inline std::vector<GroupMultiset> enumerate_multisets(const Group& group, std::int64_t delta) {
  std::vector<GroupMultiset> out;
  MultisetEnumerator e(group, delta);
  Vector v;
  while (e.next(v)) out.emplace_back(group, v);
  return out;
}

struct OracleReport {
  BigCount total_multisets = 0;
  BigCount necklaces = 0;
  BigCount symmetric_necklaces = 0;
  BigCount bracelets = 0;
  BigCount decimation_classes = 0;
  /// Multiplier group (sorted element list) -> number of necklaces with it.
  std::map<std::vector<std::int64_t>, BigCount> per_multiplier_group;
  std::optional<std::vector<Vector>> class_representatives;
};

struct CensusOptions {
  std::uint64_t budget = 5'000'000;
  bool keep_representatives = false;
};

namespace detail {

/// Precomputed permutations of the index set: out[perm[i]] = v[i].
struct Actions {
  std::vector<std::vector<std::size_t>> translations;  // by g
  std::vector<std::int64_t> unit_values;
  std::vector<std::vector<std::size_t>> dilations;  // by each unit
  std::vector<std::size_t> negation;

  explicit Actions(const Group& g) {
    const std::size_t n = g.size();
    translations.assign(n, std::vector<std::size_t>(n));
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t i = 0; i < n; ++i) translations[s][i] = g.add(i, s);
    for (std::int64_t t = 1; t < g.exponent(); ++t) {
      if (std::gcd(t, g.exponent()) != 1) continue;
      unit_values.push_back(t);
      std::vector<std::size_t> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = g.scale(t, i);
      dilations.push_back(std::move(p));
    }
    negation.resize(n);
    for (std::size_t i = 0; i < n; ++i) negation[i] = g.neg(i);
  }
};

inline Vector apply(const std::vector<std::size_t>& perm, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[perm[i]] = v[i];
  return out;
}

/// Is w + s lexicographically smaller than v, for the translation perm of s?
inline bool translate_less(const std::vector<std::size_t>& shift_inverse, const Vector& w, const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto a = w[shift_inverse[i]];
    if (a != v[i]) return a < v[i];
  }
  return false;
}

class Census {
 public:
  explicit Census(const Group& g) : group_(g), actions_(g) {
    // (w + s)[i] = w[i - s]: store, for each s, the index i - s.
    inverse_translations_.assign(g.size(), std::vector<std::size_t>(g.size()));
    for (std::size_t s = 0; s < g.size(); ++s)
      for (std::size_t i = 0; i < g.size(); ++i) inverse_translations_[s][i] = g.sub(i, s);
  }

  /// v is the least member of its necklace.
  bool is_necklace_min(const Vector& v) const { return !any_translate_less(v, v); }

  /// Some translate of w is smaller than v.
  bool any_translate_less(const Vector& w, const Vector& v) const {
    for (const auto& inv : inverse_translations_)
      if (translate_less(inv, w, v)) return true;
    return false;
  }

  Vector necklace_min(const Vector& w) const {
    Vector best = w;
    for (const auto& inv : inverse_translations_) {
      if (translate_less(inv, w, best)) {
        for (std::size_t i = 0; i < w.size(); ++i) best[i] = w[inv[i]];
      }
    }
    return best;
  }

  bool is_symmetric(const Vector& v) const {
    const auto& g = group_;
    for (std::size_t center = 0; center < g.size(); ++center) {
      bool ok = true;
      for (std::size_t k = 0; k < g.size() && ok; ++k) ok = v[g.add(center, k)] == v[g.sub(center, k)];
      if (ok) return true;
    }
    return false;
  }

  const Actions& actions() const noexcept { return actions_; }

 private:
  Group group_;
  Actions actions_;
  std::vector<std::vector<std::size_t>> inverse_translations_;
};

}  // namespace detail

/// Brute-force census of necklaces, symmetric necklaces, bracelets and
/// decimation classes (orbits under translation, translation and negation,
/// and the full affine group), plus the multiplier group of every necklace
/// computed as the stabiliser of the necklace under dilation.
inline OracleReport orbit_census(const Group& group, std::int64_t delta, const CensusOptions& options = {}) {
  OracleReport report;
  report.total_multisets = multiset_coeff(group.order(), delta);
  if (report.total_multisets > options.budget)
    fail(ErrorCode::TooLarge, report.total_multisets.str() + " multisets exceed the enumeration budget of " +
                                  std::to_string(options.budget));
  if (options.keep_representatives) report.class_representatives.emplace();

  const detail::Census census(group);
  const auto& act = census.actions();
  MultisetEnumerator e(group, delta);
  Vector v;
  while (e.next(v)) {
    if (!census.is_necklace_min(v)) continue;
    report.necklaces += 1;
    if (census.is_symmetric(v)) report.symmetric_necklaces += 1;

    const Vector reversed = detail::apply(act.negation, v);
    if (!census.any_translate_less(reversed, v)) report.bracelets += 1;

    std::vector<std::int64_t> stabiliser;
    bool class_min = true;
    for (std::size_t u = 0; u < act.dilations.size(); ++u) {
      const Vector dilated = detail::apply(act.dilations[u], v);
      if (class_min && census.any_translate_less(dilated, v)) class_min = false;
      if (census.necklace_min(dilated) == v) stabiliser.push_back(act.unit_values[u]);
    }
    report.per_multiplier_group[stabiliser] += 1;
    if (class_min) {
      report.decimation_classes += 1;
      if (report.class_representatives) report.class_representatives->push_back(v);
    }
  }
  return report;
}

/// Full orbit of v under translations, optionally with negation or all unit
/// dilations; for checking orbit sizes directly.
enum class Action { Translations, TranslationsAndNegation, Affine };

inline std::set<Vector> orbit(const Group& group, const Vector& v, Action action) {
  const detail::Actions act(group);
  std::vector<Vector> seeds{v};
  if (action == Action::TranslationsAndNegation) seeds.push_back(detail::apply(act.negation, v));
  if (action == Action::Affine) {
    seeds.clear();
    for (const auto& d : act.dilations) seeds.push_back(detail::apply(d, v));
  }
  std::set<Vector> out;
  for (const auto& s : seeds)
    for (const auto& t : act.translations) out.insert(detail::apply(t, s));
  return out;
}

}  // namespace decimation::oracle
