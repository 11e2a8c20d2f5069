#include <gtest/gtest.h>

#include <numeric>

#include "decimation/multiplier.hpp"
#include "support/test_oracles.hpp"

using namespace decimation;

namespace {

GroupMultiset ms(const char* group, const char* vec) { return GroupMultiset::parse(Group::parse(group), vec); }

std::vector<std::int64_t> indices(const std::vector<GroupElement>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x.index()));
  return out;
}

// t is a multiplier iff tI equals some translate of I, checked naively.
std::vector<std::int64_t> brute_multipliers(const GroupMultiset& I) {
  const auto& g = I.group();
  std::vector<std::int64_t> out;
  for (auto t : testing_oracles::brute_units(g.exponent())) {
    const auto d = dilate(I, t);
    for (const auto& s : g.elements())
      if (translate(I, s) == d) {
        out.push_back(t);
        break;
      }
  }
  return out;
}

}  // namespace

TEST(Witness, Examples) {
  const auto I = ms("Z5", "1,1,0,0,0");
  const auto w = translate_witness(I, 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->g0.index(), 4u);
  EXPECT_EQ(w->j, (std::vector<std::int64_t>{0}));
  EXPECT_FALSE(translate_witness(I, 2));
  EXPECT_TRUE(translate_witness(I, 1)->g0.is_identity());
}

TEST(Witness, Errors) {
  try {
    translate_witness(ms("Z9", "1,0,0,1,0,0,1,0,0"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PeriodicInput);
  }
  try {
    translate_witness(ms("Z5", "1,1,0,0,0"), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAUnit);
  }
}

TEST(Witness, JTupleRoundTripsAndSolvesLinearRelation) {
  testing_oracles::Gen gen(21);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto g = gen.group(20);
    const auto I = gen.multiset(g, gen.uniform(1, 8));  // gcd(delta, exponent) may exceed 1
    if (is_periodic(I)) continue;
    for (auto t : brute_multipliers(I)) {
      const auto w = translate_witness(I, t);
      ASSERT_TRUE(w);
      EXPECT_EQ(translate(I, w->g0), dilate(I, t));
      EXPECT_EQ(scalar_mul(I.density(), w->g0), scalar_mul(t - 1, I.sigma()));
      for (std::size_t k = 0; k < g.rank(); ++k) {
        EXPECT_GE(w->j[k], 0);
        EXPECT_LT(w->j[k], std::gcd(I.density(), g.moduli()[k]));
      }
      EXPECT_EQ(witness_from_j(I, t, w->j), w->g0);
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(MultiplierGroup, Examples) {
  EXPECT_EQ(multiplier_group(ms("Z5", "1,1,0,0,0")).elements(), (std::vector<std::int64_t>{1, 4}));
  EXPECT_EQ(multiplier_group(ms("Z7", "1,0,0,0,0,0,0")).elements(), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(multiplier_group(ms("Z5", "2,1,0,0,0")).elements(), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(multiplier_group(ms("Z7", "1,1,0,1,0,0,0")).elements(), (std::vector<std::int64_t>{1, 2, 4}));
  try {
    multiplier_group(ms("Z5", "0,0,0,0,0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyMultiset);
  }
}

TEST(MultiplierGroup, MatchesBruteForceIncludingNonCoprimeDensity) {
  testing_oracles::Gen gen(22);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = gen.group(24);
    const auto I = gen.multiset(g, gen.uniform(1, 9));
    EXPECT_EQ(multiplier_group(I).elements(), brute_multipliers(I)) << I.to_string();
  }
}

TEST(MultiplierGroup, AffineInvariance) {
  testing_oracles::Gen gen(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = gen.group(20);
    const auto I = gen.multiset(g, gen.coprime_density(g, 9));
    const auto h = multiplier_group(I).elements();
    const auto s = g.element(static_cast<std::size_t>(gen.uniform(0, g.order() - 1)));
    const auto u = gen.unit(g.exponent());
    EXPECT_EQ(multiplier_group(translate(I, s)).elements(), h);
    EXPECT_EQ(multiplier_group(dilate(I, u)).elements(), h);
    EXPECT_EQ(multiplier_group(translate(dilate(I, u), s)).elements(), h);
  }
}

TEST(TranslateFixing, Examples) {
  EXPECT_TRUE(is_translate_fixing(ms("Z5", "1,1,0,0,0"), 4));
  EXPECT_TRUE(is_translate_fixing(ms("Z7", "0,1,1,0,1,0,0"), 2));
  try {
    is_translate_fixing(ms("Z9", "1,0,0,1,0,0,1,0,0"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PeriodicInput);
  }
  try {
    is_translate_fixing(ms("Z5", "1,1,0,0,0"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAMultiplier);
  }
}

TEST(TranslateFixing, DivisibilityTestAgreesWithDirectSearch) {
  testing_oracles::Gen gen(24);
  int fixing = 0, not_fixing = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto g = gen.group(24);
    const auto I = gen.multiset(g, gen.uniform(1, 8));
    if (is_periodic(I)) continue;
    const auto mult = multiplier_group(I);
    for (auto t : mult.elements()) {
      bool direct = false;
      for (const auto& z : g.elements()) {
        const auto J = translate(I, z);
        if (dilate(J, t) == J) {
          direct = true;
          break;
        }
      }
      EXPECT_EQ(is_translate_fixing(I, t), direct) << I.to_string() << " t=" << t;
      (direct ? fixing : not_fixing)++;
    }
  }
  EXPECT_GT(fixing, 100);
  EXPECT_GT(not_fixing, 5);
}

TEST(FixedTranslates, Examples) {
  EXPECT_EQ(indices(fixed_translates(ms("Z5", "1,1,0,0,0"), 4)), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(indices(fixed_translates(ms("Z7", "0,1,1,0,1,0,0"), 2)), (std::vector<std::int64_t>{0}));
  const auto I = ms("Z3xZ3", "1,1,0,0,0,0,0,0,0");
  EXPECT_EQ(fixed_translates(I, 1).size(), 9u);
  EXPECT_EQ(indices(subgroup_fixed_translates(ms("Z5", "1,1,0,0,0"), {4})), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(indices(subgroup_fixed_translates(ms("Z7", "0,1,1,0,1,0,0"), {2})), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(subgroup_fixed_translates(ms("Z5", "1,1,0,0,0"), {}).size(), 5u);
  try {
    subgroup_fixed_translates(ms("Z5", "1,1,0,0,0"), {4, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAMultiplier);
  }
}

TEST(FixedTranslates, CountAndCanonicalShift) {
  testing_oracles::Gen gen(25);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = gen.group(20);
    const auto I = gen.multiset(g, gen.coprime_density(g, 9));
    const auto z0 = canonical_shift(I);
    const auto h = multiplier_group(I);
    for (auto t : h.elements()) {
      const auto fixed = fixed_translates(I, t);
      std::int64_t expect = 1;
      for (auto l : g.moduli()) expect *= std::gcd(t - 1, l);
      EXPECT_EQ(static_cast<std::int64_t>(fixed.size()), expect);
      EXPECT_NE(std::find(fixed.begin(), fixed.end(), z0), fixed.end());
      for (const auto& z : fixed) EXPECT_EQ(dilate(translate(I, z), t), translate(I, z));
    }
    // Translates fixed by all of H: prod gcd(C, l_i) of them, z0 among them.
    const auto common = subgroup_fixed_translates(I, h.generators());
    const auto c = c_value(h.generators(), g.exponent());
    std::int64_t expect = 1;
    for (auto l : g.moduli()) expect *= std::gcd(c, l);
    EXPECT_EQ(static_cast<std::int64_t>(common.size()), expect);
    EXPECT_NE(std::find(common.begin(), common.end(), z0), common.end());
  }
}
