#include <gtest/gtest.h>

#include <algorithm>

#include "partic/affine.hpp"

namespace partic::affine {
namespace {

Configuration config(std::vector<int> occ, int t = 0) { return Configuration{std::move(occ), t}; }

bool contains(const std::vector<RelationInstance>& instances, const std::string& family,
              const Word& lhs, const Word& rhs) {
  return std::any_of(instances.begin(), instances.end(), [&](const RelationInstance& r) {
    return r.family == family && ((r.lhs == lhs && r.rhs == rhs) || (r.lhs == rhs && r.rhs == lhs));
  });
}

TEST(AffineWord, Validation) {
  EXPECT_THROW((void)make_word(2, {0}), std::invalid_argument);
  EXPECT_THROW((void)make_word(4, {4}), std::invalid_argument);
  EXPECT_THROW((void)make_word(4, {-1}), std::invalid_argument);
  EXPECT_NO_THROW((void)make_word(4, {0, 1, 2, 3}));
}

TEST(AffineAct, Examples) {
  EXPECT_EQ(act_word(make_word(8, {6, 5, 3, 2, 5}), config({3, 1, 0, 0, 2, 0, 0, 1})),
            config({3, 0, 0, 1, 0, 1, 1, 1}));
  EXPECT_EQ(act_gen(0, config({0, 0, 0, 1})), config({1, 0, 0, 0}, 1));
  EXPECT_FALSE(act_gen(0, config({1, 0, 0, 0})).has_value());
  EXPECT_EQ(act_gen(3, config({0, 0, 1, 0}, 2)), config({0, 0, 0, 1}, 2));
  EXPECT_EQ(act_word(make_word(4, {}), config({1, 2, 3, 4})), config({1, 2, 3, 4}));
}

TEST(AffineAct, PreservesParticlesAndCountsWraps) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& c : configurations_up_to(n, 3)) {
      for (int i = 0; i < n; ++i) {
        const auto result = act_gen(i, c);
        if (result) {
          ASSERT_EQ(result->particles(), c.particles());
          ASSERT_EQ(result->t, c.t + (i == 0 ? 1 : 0));
        }
      }
    }
  }
}

TEST(RelationInstances, Examples) {
  const auto n4 = relation_instances(4, 2, 1);
  EXPECT_TRUE(contains(n4, "partic", make_word(4, {0, 3, 1, 0}), make_word(4, {1, 0, 3, 0})));
  // All middle exponents zero: a_0 a_1 a_0 = a_1 a_0 a_0, listed once under plac2.
  EXPECT_TRUE(contains(n4, "plac2", make_word(4, {0, 1, 0}), make_word(4, {1, 0, 0})));
  EXPECT_TRUE(contains(n4, "comm", make_word(4, {0, 2}), make_word(4, {2, 0})));
  EXPECT_TRUE(contains(n4, "plac1", make_word(4, {0, 3, 0}), make_word(4, {0, 0, 3})));
}

TEST(RelationInstances, SidesDifferAndShareLetters) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& r : relation_instances(n, 2, 1)) {
      ASSERT_NE(r.lhs, r.rhs);
      auto a = r.lhs.letters;
      auto b = r.rhs.letters;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ASSERT_EQ(a, b) << r.family;
    }
  }
}

TEST(VerifyRelation, Examples) {
  EXPECT_FALSE(verify_relation_on_module(make_word(4, {1}), make_word(4, {2}), 2).holds);
  EXPECT_TRUE(verify_relation_on_module(make_word(4, {1, 2}), make_word(4, {1, 2}), 3).holds);
  for (const auto& r : relation_instances(4, 2, 1)) {
    EXPECT_TRUE(verify_relation_on_module(r.lhs, r.rhs, 5).holds) << r.family << " " << to_string(r.lhs);
  }
}

TEST(VerifyRelation, EqualWrapCountsWhenBothSidesSurvive) {
  for (const auto& r : relation_instances(5, 1, 1)) {
    for (const auto& c : configurations_up_to(5, 3)) {
      const auto left = act_word(r.lhs, c);
      const auto right = act_word(r.rhs, c);
      if (left && right) {
        ASSERT_EQ(left->t, right->t);
      }
    }
  }
}

// At N = 3 the neighbours i-1 and i+1 of i are adjacent, and the affine
// partic relation fails on the module.
TEST(VerifyRelation, ParticFailsAtRankThree) {
  const auto result = verify_relation_on_module(make_word(3, {1, 0, 2, 1}), make_word(3, {2, 1, 0, 1}), 1);
  EXPECT_FALSE(result.holds);
  ASSERT_TRUE(result.witness.has_value());
  EXPECT_EQ(*result.witness, config({1, 0, 0}));
  EXPECT_EQ(act_word(make_word(3, {1, 0, 2, 1}), config({1, 0, 0})), config({0, 1, 0}, 1));
  EXPECT_FALSE(act_word(make_word(3, {2, 1, 0, 1}), config({1, 0, 0})).has_value());
}

}  // namespace
}  // namespace partic::affine
