#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decimation/errors.hpp"
#include "decimation/group.hpp"
#include "decimation/number_theory.hpp"

namespace decimation {

/// A finite multiset of group elements, stored as its dense multiplicity
/// vector (equivalently a nonnegative integer vector indexed by G).
class GroupMultiset {
 public:
  GroupMultiset(Group group, std::vector<std::int64_t> mult) : group_(std::move(group)), mult_(std::move(mult)) {
    if (mult_.size() != group_.size())
      fail(ErrorCode::GroupMismatch, "multiplicity vector of length " + std::to_string(mult_.size()) +
                                         " for a group of order " + std::to_string(group_.order()));
    std::vector<std::int64_t> sum(group_.rank(), 0);
    for (std::size_t i = 0; i < mult_.size(); ++i) {
      if (mult_[i] < 0) fail(ErrorCode::Parse, "negative multiplicity");
      density_ += mult_[i];
      for (std::size_t k = 0; k < group_.rank(); ++k)
        sum[k] = nt::mod(sum[k] + nt::mul_mod(mult_[i], group_.residue(i, k), group_.moduli()[k]),
                         group_.moduli()[k]);
    }
    sigma_ = group_.index_of(sum);
  }

  /// Multiset with the listed elements (repeats allowed), e.g. {0,0,1}.
  static GroupMultiset from_elements(const Group& group, const std::vector<std::size_t>& indices) {
    std::vector<std::int64_t> mult(group.size(), 0);
    for (auto i : indices) {
      if (i >= group.size()) fail(ErrorCode::GroupMismatch, "element index out of range");
      ++mult[i];
    }
    return GroupMultiset(group, std::move(mult));
  }

  /// Parses a comma-separated multiplicity list in canonical index order.
  static GroupMultiset parse(const Group& group, std::string_view text) {
    std::vector<std::int64_t> mult;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find(',', pos), text.size());
      std::string_view tok = text.substr(pos, end - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
        fail(ErrorCode::Parse, "bad multiplicity '" + std::string(tok) + "' in vector '" + std::string(text) + "'");
      mult.push_back(std::stoll(std::string(tok)));
      pos = end + 1;
    }
    if (mult.size() != group.size())
      fail(ErrorCode::Parse, "vector has " + std::to_string(mult.size()) + " entries, group " + group.to_string() +
                                 " has order " + std::to_string(group.order()));
    return GroupMultiset(group, std::move(mult));
  }

  const Group& group() const noexcept { return group_; }
  const std::vector<std::int64_t>& multiplicities() const noexcept { return mult_; }
  std::int64_t multiplicity(std::size_t index) const noexcept { return mult_[index]; }
  std::int64_t density() const noexcept { return density_; }
  GroupElement sigma() const { return group_.element(sigma_); }
  std::size_t sigma_index() const noexcept { return sigma_; }
  bool empty() const noexcept { return density_ == 0; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < mult_.size(); ++i) out += (i ? "," : "") + std::to_string(mult_[i]);
    return out;
  }

  friend bool operator==(const GroupMultiset& a, const GroupMultiset& b) noexcept {
    return a.mult_ == b.mult_ && a.group_ == b.group_;
  }

 private:
  Group group_;
  std::vector<std::int64_t> mult_;
  std::int64_t density_ = 0;
  std::size_t sigma_ = 0;
};

/// I + g; shifts by the element with canonical index `shift`.
inline GroupMultiset translate_by_index(const GroupMultiset& multiset, std::size_t shift) {
  const auto& g = multiset.group();
  std::vector<std::int64_t> out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) out[g.add(i, shift)] = multiset.multiplicity(i);
  return GroupMultiset(g, std::move(out));
}

inline GroupMultiset translate(const GroupMultiset& multiset, const GroupElement& shift) {
  require_same_group(multiset.group(), shift.group());
  return translate_by_index(multiset, shift.index());
}

inline void require_unit(std::int64_t t, std::int64_t modulus) {
  if (std::gcd(nt::mod(t, modulus), modulus) != 1)
    fail(ErrorCode::NotAUnit, std::to_string(t) + " is not a unit mod " + std::to_string(modulus));
}

/// tI; t must be a unit modulo the exponent so that x -> t*x permutes G.
inline GroupMultiset dilate(const GroupMultiset& multiset, std::int64_t t) {
  const auto& g = multiset.group();
  require_unit(t, g.exponent());
  std::vector<std::int64_t> out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) out[g.scale(t, i)] += multiset.multiplicity(i);
  return GroupMultiset(g, std::move(out));
}

/// First nonzero g (in canonical order) with I + g = I, if any.
inline std::optional<GroupElement> is_periodic(const GroupMultiset& multiset) {
  if (multiset.empty()) fail(ErrorCode::EmptyMultiset, "periodicity of the empty multiset");
  const auto& g = multiset.group();
  if (std::gcd(multiset.density(), g.exponent()) == 1) return std::nullopt;
  for (std::size_t shift = 1; shift < g.size(); ++shift) {
    bool fixed = true;
    for (std::size_t i = 0; i < g.size() && fixed; ++i)
      fixed = multiset.multiplicity(g.add(i, shift)) == multiset.multiplicity(i);
    if (fixed) return g.element(shift);
  }
  return std::nullopt;
}

/// z0 = -delta^{-1} sigma, the translate offset fixed by every multiplier when
/// gcd(delta, exponent) = 1.
inline GroupElement canonical_shift(const GroupMultiset& multiset) {
  const auto& g = multiset.group();
  if (std::gcd(multiset.density(), g.exponent()) != 1)
    fail(ErrorCode::UnsupportedParameters, "canonical shift needs gcd(density, exponent) = 1, density " +
                                               std::to_string(multiset.density()) + ", exponent " +
                                               std::to_string(g.exponent()));
  const std::int64_t inv = g.exponent() == 1 ? 0 : nt::mod_inverse(multiset.density(), g.exponent());
  return g.element(g.neg(g.scale(inv, multiset.sigma_index())));
}

inline bool is_symmetric_about(const GroupMultiset& v, std::size_t center) {
  const auto& g = v.group();
  for (std::size_t k = 0; k < g.size(); ++k)
    if (v.multiplicity(g.add(center, k)) != v.multiplicity(g.sub(center, k))) return false;
  return true;
}

/// Every j0 with v(j0 + k) = v(j0 - k) for all k. For non-periodic v the list
/// is empty or has prod gcd(2, l_i) entries; periodic vectors can have more.
inline std::vector<GroupElement> symmetry_indices(const GroupMultiset& v) {
  std::vector<GroupElement> out;
  for (std::size_t j = 0; j < v.group().size(); ++j)
    if (is_symmetric_about(v, j)) out.push_back(v.group().element(j));
  return out;
}

}  // namespace decimation
