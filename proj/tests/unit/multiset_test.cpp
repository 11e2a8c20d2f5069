#include <gtest/gtest.h>

#include "decimation/multiset.hpp"
#include "support/test_oracles.hpp"

using namespace decimation;

namespace {

GroupMultiset ms(const char* group, const char* vec) { return GroupMultiset::parse(Group::parse(group), vec); }

std::vector<std::int64_t> indices(const std::vector<GroupElement>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x.index()));
  return out;
}

}  // namespace

TEST(Multiset, DensityAndSigma) {
  const auto I = ms("Z5", "2,1,0,0,0");
  EXPECT_EQ(I.density(), 3);
  EXPECT_EQ(I.sigma().index(), 1u);
  const auto g = Group::parse("Z3xZ3");
  const auto J = GroupMultiset::from_elements(g, {g.index_of(std::vector<std::int64_t>{1, 2}), 4, 4});
  EXPECT_EQ(J.density(), 3);
  EXPECT_EQ(J.sigma().residues(), (std::vector<std::int64_t>{0, 1}));
}

TEST(Multiset, Validation) {
  const auto g = Group::parse("Z5");
  EXPECT_THROW(GroupMultiset(g, {1, 2}), Error);
  EXPECT_THROW(GroupMultiset(g, {1, -1, 0, 0, 0}), Error);
  for (const char* bad : {"1,2", "1,,0,0,0", "a,0,0,0,0", "1,0,0,0,0,0", "-1,0,0,0,0"}) {
    try {
      GroupMultiset::parse(g, bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
    }
  }
}

TEST(Multiset, Translate) {
  const auto g = Group::parse("Z5");
  EXPECT_EQ(translate(ms("Z5", "2,1,0,0,0"), g.element(3)), ms("Z5", "0,0,0,2,1"));
  const auto I = ms("Z5", "2,1,0,0,3");
  EXPECT_EQ(translate(I, g.identity()), I);
  EXPECT_EQ(translate(ms("Z3", "1,1,1"), Group::parse("Z3").element(1)), ms("Z3", "1,1,1"));
  EXPECT_THROW(translate(I, Group::parse("Z7").element(1)), Error);
}

TEST(Multiset, Dilate) {
  EXPECT_EQ(dilate(ms("Z5", "1,1,0,0,0"), 4), ms("Z5", "1,0,0,0,1"));
  const auto I = ms("Z5", "2,1,0,0,3");
  EXPECT_EQ(dilate(I, 1), I);
  EXPECT_EQ(dilate(ms("Z7", "0,1,1,0,1,0,0"), 2), ms("Z7", "0,1,1,0,1,0,0"));
  try {
    dilate(ms("Z6", "1,0,0,0,0,0"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAUnit);
  }
}

TEST(Multiset, Periodic) {
  EXPECT_EQ(is_periodic(ms("Z4", "1,0,1,0"))->index(), 2u);
  EXPECT_FALSE(is_periodic(ms("Z5", "1,1,0,0,0")));
  EXPECT_EQ(is_periodic(ms("Z6", "2,0,0,2,0,0"))->index(), 3u);
  EXPECT_FALSE(is_periodic(ms("Z6", "2,0,0,1,0,0")));
  try {
    is_periodic(ms("Z4", "0,0,0,0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyMultiset);
  }
}

TEST(Multiset, CanonicalShift) {
  const auto I = ms("Z5", "1,1,0,0,0");
  const auto z = canonical_shift(I);
  EXPECT_EQ(z.index(), 2u);
  const auto fixed = translate(I, z);
  EXPECT_EQ(dilate(fixed, 4), fixed);
  EXPECT_EQ(canonical_shift(ms("Z7", "0,1,1,0,1,0,0")).index(), 0u);
  EXPECT_EQ(canonical_shift(ms("Z5", "0,1,0,0,1")).index(), 0u);
  try {
    canonical_shift(ms("Z4", "1,1,0,0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedParameters);
  }
}

TEST(Multiset, CanonicalShiftHasZeroSum) {
  testing_oracles::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gen.group(20);
    const auto I = gen.multiset(g, gen.coprime_density(g, 9));
    const auto shifted = translate(I, canonical_shift(I));
    EXPECT_TRUE(shifted.sigma().is_identity()) << I.to_string();
  }
}

TEST(Multiset, SymmetryIndices) {
  EXPECT_EQ(indices(symmetry_indices(ms("Z5", "1,1,0,0,0"))), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(indices(symmetry_indices(ms("Z5", "1,0,1,0,0"))), (std::vector<std::int64_t>{1}));
  EXPECT_TRUE(symmetry_indices(ms("Z5", "2,1,0,0,0")).empty());
  // Constant vectors are symmetric about every element.
  EXPECT_EQ(symmetry_indices(ms("Z5", "1,1,1,1,1")).size(), 5u);
}

TEST(Multiset, SymmetricNonPeriodicVectorsHaveThetaIndices) {
  testing_oracles::Gen gen(12);
  int seen = 0;
  for (int trial = 0; trial < 4000 && seen < 150; ++trial) {
    const auto g = gen.group(16);
    const auto I = gen.multiset(g, gen.uniform(1, 7));
    if (is_periodic(I)) continue;
    const auto idx = symmetry_indices(I);
    if (idx.empty()) continue;
    ++seen;
    std::int64_t theta = 1;
    for (auto l : g.moduli()) theta *= std::gcd<std::int64_t>(2, l);
    EXPECT_EQ(static_cast<std::int64_t>(idx.size()), theta) << I.to_string();
  }
  EXPECT_GE(seen, 100);
}

TEST(Multiset, GroupActionLaws) {
  testing_oracles::Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gen.group(24);
    const auto I = gen.multiset(g, gen.uniform(0, 8));
    const auto a = g.element(static_cast<std::size_t>(gen.uniform(0, g.order() - 1)));
    const auto b = g.element(static_cast<std::size_t>(gen.uniform(0, g.order() - 1)));
    const auto s = gen.unit(g.exponent()), t = gen.unit(g.exponent());
    EXPECT_EQ(translate(translate(I, a), b), translate(I, a + b));
    EXPECT_EQ(dilate(dilate(I, s), t), dilate(I, s * t));
    EXPECT_EQ(dilate(translate(I, a), t), translate(dilate(I, t), scalar_mul(t, a)));
    EXPECT_EQ(translate(I, a).density(), I.density());
    EXPECT_EQ(dilate(I, t).sigma(), scalar_mul(t, I.sigma()));
  }
}
