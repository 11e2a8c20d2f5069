#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decimation/errors.hpp"
#include "decimation/number_theory.hpp"

namespace decimation {

class GroupElement;

/// The finite abelian group Z_{l1} x ... x Z_{lr} in the presentation given.
///
/// Elements are numbered in row-major mixed-radix order: the last modulus
/// varies fastest. Every dense vector, matrix and listing in the library uses
/// this numbering. Copies share the immutable description.
class Group {
 public:
  explicit Group(std::vector<std::int64_t> moduli) {
    if (moduli.empty()) fail(ErrorCode::InvalidGroupSpec, "a group needs at least one cyclic factor");
    for (auto m : moduli)
      if (m < 2) fail(ErrorCode::InvalidGroupSpec, "modulus " + std::to_string(m) + " is below 2");
    auto data = std::make_shared<Data>();
    data->strides.assign(moduli.size(), 1);
    for (std::size_t i = moduli.size(); i-- > 1;) data->strides[i - 1] = data->strides[i] * moduli[i];
    data->order = data->strides[0] * moduli[0];
    data->exponent = 1;
    for (auto m : moduli) data->exponent = std::lcm(data->exponent, m);
    data->moduli = std::move(moduli);
    data_ = std::move(data);
  }

  /// Parses `Z<l1>x...xZ<lr>`, case-insensitive, e.g. `Z5` or `z3xZ9`.
  static Group parse(std::string_view spec) {
    std::vector<std::int64_t> moduli;
    std::size_t pos = 0;
    auto bad = [&](const std::string& why) -> void {
      fail(ErrorCode::InvalidGroupSpec, "cannot parse group '" + std::string(spec) + "': " + why);
    };
    if (spec.empty()) bad("empty");
    while (pos < spec.size()) {
      if (std::tolower(static_cast<unsigned char>(spec[pos])) != 'z') bad("expected 'Z'");
      ++pos;
      const std::size_t start = pos;
      std::int64_t value = 0;
      while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
        value = value * 10 + (spec[pos] - '0');
        if (value > (std::int64_t{1} << 40)) bad("modulus too large");
        ++pos;
      }
      if (pos == start) bad("expected a modulus after 'Z'");
      moduli.push_back(value);
      if (pos == spec.size()) break;
      if (std::tolower(static_cast<unsigned char>(spec[pos])) != 'x') bad("expected 'x' between factors");
      ++pos;
      if (pos == spec.size()) bad("trailing 'x'");
    }
    return Group(std::move(moduli));
  }

  const std::vector<std::int64_t>& moduli() const noexcept { return data_->moduli; }
  std::size_t rank() const noexcept { return data_->moduli.size(); }
  std::int64_t order() const noexcept { return data_->order; }
  std::int64_t exponent() const noexcept { return data_->exponent; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(data_->order); }
  bool is_cyclic() const noexcept { return rank() == 1; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) out += 'x';
      out += 'Z' + std::to_string(data_->moduli[i]);
    }
    return out;
  }

  // Index-level arithmetic, used by every dense algorithm.

  std::int64_t residue(std::size_t index, std::size_t k) const noexcept {
    return static_cast<std::int64_t>(index) / data_->strides[k] % data_->moduli[k];
  }

  std::vector<std::int64_t> residues_of(std::size_t index) const {
    std::vector<std::int64_t> out(rank());
    for (std::size_t k = 0; k < rank(); ++k) out[k] = residue(index, k);
    return out;
  }

  /// Reduces each coordinate into range before encoding.
  std::size_t index_of(std::span<const std::int64_t> residues) const {
    if (residues.size() != rank()) fail(ErrorCode::GroupMismatch, "residue tuple has the wrong length");
    std::int64_t index = 0;
    for (std::size_t k = 0; k < rank(); ++k) index += nt::mod(residues[k], data_->moduli[k]) * data_->strides[k];
    return static_cast<std::size_t>(index);
  }

  std::size_t add(std::size_t a, std::size_t b) const noexcept {
    std::int64_t index = 0;
    for (std::size_t k = 0; k < rank(); ++k)
      index += (residue(a, k) + residue(b, k)) % data_->moduli[k] * data_->strides[k];
    return static_cast<std::size_t>(index);
  }

  std::size_t sub(std::size_t a, std::size_t b) const noexcept {
    std::int64_t index = 0;
    for (std::size_t k = 0; k < rank(); ++k) {
      const auto m = data_->moduli[k];
      index += (residue(a, k) - residue(b, k) + m) % m * data_->strides[k];
    }
    return static_cast<std::size_t>(index);
  }

  std::size_t neg(std::size_t a) const noexcept { return sub(0, a); }

  std::size_t scale(std::int64_t m, std::size_t a) const noexcept {
    std::int64_t index = 0;
    for (std::size_t k = 0; k < rank(); ++k)
      index += nt::mul_mod(m, residue(a, k), data_->moduli[k]) * data_->strides[k];
    return static_cast<std::size_t>(index);
  }

  GroupElement element(std::size_t index) const;
  GroupElement element(std::span<const std::int64_t> residues) const;
  GroupElement element(std::initializer_list<std::int64_t> residues) const;
  GroupElement identity() const;
  std::vector<GroupElement> elements() const;

  friend bool operator==(const Group& a, const Group& b) noexcept {
    return a.data_ == b.data_ || a.data_->moduli == b.data_->moduli;
  }

 private:
  struct Data {
    std::vector<std::int64_t> moduli;
    std::vector<std::int64_t> strides;
    std::int64_t order = 1;
    std::int64_t exponent = 1;
  };
  std::shared_ptr<const Data> data_;
};

inline Group make_group(std::vector<std::int64_t> moduli) { return Group(std::move(moduli)); }

class GroupElement {
 public:
  GroupElement(Group group, std::size_t index) : group_(std::move(group)), index_(index) {
    if (index_ >= group_.size()) fail(ErrorCode::GroupMismatch, "element index out of range");
  }

  const Group& group() const noexcept { return group_; }
  std::size_t index() const noexcept { return index_; }
  std::vector<std::int64_t> residues() const { return group_.residues_of(index_); }
  std::int64_t residue(std::size_t k) const noexcept { return group_.residue(index_, k); }
  bool is_identity() const noexcept { return index_ == 0; }

  std::string to_string() const {
    const auto r = residues();
    if (r.size() == 1) return std::to_string(r[0]);
    std::string out = "(";
    for (std::size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + std::to_string(r[k]);
    return out + ")";
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
    return a.index_ == b.index_ && a.group_ == b.group_;
  }

 private:
  Group group_;
  std::size_t index_;
};

inline GroupElement Group::element(std::size_t index) const { return GroupElement(*this, index); }
inline GroupElement Group::element(std::span<const std::int64_t> residues) const {
  for (std::size_t k = 0; k < residues.size() && k < rank(); ++k)
    if (residues[k] < 0 || residues[k] >= data_->moduli[k])
      fail(ErrorCode::GroupMismatch, "residue " + std::to_string(residues[k]) + " out of range");
  return GroupElement(*this, index_of(residues));
}
inline GroupElement Group::element(std::initializer_list<std::int64_t> residues) const {
  return element(std::span<const std::int64_t>(residues.begin(), residues.size()));
}
inline GroupElement Group::identity() const { return GroupElement(*this, 0); }
inline std::vector<GroupElement> Group::elements() const {
  std::vector<GroupElement> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(*this, i);
  return out;
}

inline void require_same_group(const Group& a, const Group& b) {
  if (!(a == b)) fail(ErrorCode::GroupMismatch, a.to_string() + " vs " + b.to_string());
}

inline GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_group(a.group(), b.group());
  return a.group().element(a.group().add(a.index(), b.index()));
}

inline GroupElement neg(const GroupElement& a) { return a.group().element(a.group().neg(a.index())); }

/// Componentwise m*a; m is reduced modulo each l_i.
inline GroupElement scalar_mul(std::int64_t m, const GroupElement& a) {
  return a.group().element(a.group().scale(m, a.index()));
}

inline GroupElement operator+(const GroupElement& a, const GroupElement& b) { return add(a, b); }
inline GroupElement operator-(const GroupElement& a) { return neg(a); }
inline GroupElement operator-(const GroupElement& a, const GroupElement& b) { return add(a, neg(b)); }

/// All x with m*x = a, in canonical index order.
///
/// Each coordinate congruence m*x = a_k (mod l_k) is solved on its own: it is
/// solvable iff d = gcd(m, l_k) divides a_k, and then has exactly d roots
/// spaced l_k/d apart. The answer is the Cartesian product, so its size is
/// either 0 or prod gcd(m, l_k).
inline std::vector<GroupElement> solve_linear(const Group& group, std::int64_t m, const GroupElement& a) {
  require_same_group(group, a.group());
  const auto& moduli = group.moduli();
  std::vector<std::vector<std::int64_t>> roots(group.rank());
  for (std::size_t k = 0; k < group.rank(); ++k) {
    const std::int64_t lk = moduli[k];
    const std::int64_t mk = nt::mod(m, lk);
    const std::int64_t ak = a.residue(k);
    const std::int64_t d = std::gcd(mk, lk);
    if (ak % d != 0) return {};
    const std::int64_t step = lk / d;
    const std::int64_t base = step == 1 ? 0 : nt::mul_mod(ak / d, nt::mod_inverse(mk / d, step), step);
    for (std::int64_t j = 0; j < d; ++j) roots[k].push_back(base + j * step);
  }
  std::vector<GroupElement> out;
  std::vector<std::size_t> pick(group.rank(), 0);
  std::vector<std::int64_t> residues(group.rank());
  while (true) {
    for (std::size_t k = 0; k < group.rank(); ++k) residues[k] = roots[k][pick[k]];
    out.push_back(group.element(group.index_of(residues)));
    std::size_t k = group.rank();
    while (k > 0) {
      --k;
      if (++pick[k] < roots[k].size()) break;
      pick[k] = 0;
      if (k == 0) {
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.index() < y.index(); });
        return out;
      }
    }
  }
}

}  // namespace decimation
