#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "decimation/big_count.hpp"
#include "decimation/errors.hpp"
#include "decimation/group.hpp"
#include "decimation/multiset.hpp"

namespace decimation {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  IntMatrix transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const auto aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

/// T_I with T(i, j) = multiplicity of g_j in I + g_i; row i is the
/// multiplicity vector of I + g_i.
struct AdjacencyMatrix {
  Group group;
  IntMatrix entries;
};

inline AdjacencyMatrix adjacency_matrix(const GroupMultiset& multiset) {
  const auto& g = multiset.group();
  IntMatrix t(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) t(i, j) = multiset.multiplicity(g.sub(j, i));
  return {g, std::move(t)};
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigCount determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<BigCount> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> BigCount& { return a[i * n + j]; };
  BigCount prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

inline bool is_invertible(const AdjacencyMatrix& t) { return determinant(t.entries) != 0; }

namespace poly {

/// Integer polynomial, coefficient i multiplies x^i; no trailing zeros.
using Poly = std::vector<BigCount>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigCount content(const Poly& p) {
  BigCount c = 0;
  for (const auto& x : p) c = boost::multiprecision::gcd(c, x);
  return c;
}

inline Poly primitive_part(Poly p) {
  trim(p);
  if (p.empty()) return p;
  BigCount c = content(p);
  if (p.back() < 0) c = -c;
  for (auto& x : p) x /= c;
  return p;
}

/// Pseudo-remainder of a by b (b nonzero).
inline Poly pseudo_remainder(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const BigCount& lead = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const BigCount factor = a.back();
    for (auto& x : a) x *= lead;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= factor * b[i];
    trim(a);
  }
  return a;
}

/// gcd over Q, returned as a primitive integer polynomial with positive lead.
inline Poly gcd(Poly a, Poly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  while (!b.empty()) {
    Poly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace poly

/// The first column of T_I read as P(x) = sum_j T(j, 0) x^j.
inline poly::Poly first_column_polynomial(const AdjacencyMatrix& t) {
  poly::Poly p(t.entries.size());
  for (std::size_t j = 0; j < t.entries.size(); ++j) p[j] = t.entries(j, 0);
  poly::trim(p);
  return p;
}

/// For cyclic G: T_I is invertible iff gcd(P(x), x^l - 1) is constant over Q.
inline bool circulant_invertible(const GroupMultiset& multiset) {
  const auto& g = multiset.group();
  if (!g.is_cyclic()) fail(ErrorCode::NotCyclic, g.to_string() + " is not cyclic");
  const auto p = first_column_polynomial(adjacency_matrix(multiset));
  poly::Poly xl1(g.size() + 1, 0);
  xl1.front() = -1;
  xl1.back() = 1;
  const auto d = poly::gcd(p, xl1);
  return d.size() == 1;
}

/// P_g with P_g T_I = T_{I+g}: row i of P_g selects row index(g_i + g).
inline IntMatrix translation_matrix(const GroupElement& shift) {
  const auto& g = shift.group();
  IntMatrix p(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) p(i, g.add(i, shift.index())) = 1;
  return p;
}

/// Q_t with Q_t^T T_I Q_t = T_{tI}: column b of Q_t has its 1 in row index(t^{-1} g_b).
inline IntMatrix dilation_matrix(const Group& g, std::int64_t t) {
  require_unit(t, g.exponent());
  const std::int64_t inverse = nt::mod_inverse(t, g.exponent());
  IntMatrix q(g.size());
  for (std::size_t b = 0; b < g.size(); ++b) q(g.scale(inverse, b), b) = 1;
  return q;
}

}  // namespace decimation
