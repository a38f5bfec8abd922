#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "twoclosure/errors.hpp"
#include "twoclosure/permutation.hpp"

using namespace twoclosure;

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), InvalidPermutation);
  EXPECT_THROW(Permutation({0, 3, 1}), InvalidPermutation);
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InvalidPermutation);
  EXPECT_THROW(Permutation::from_cycles(2, {{0, 1, 2}}), InvalidPermutation);
}

TEST(PermutationTest, ComposeAppliesLeftOperandFirst) {
  const auto id = Permutation::identity(3);
  const auto s01 = Permutation::from_cycles(3, {{0, 1}});
  const auto s12 = Permutation::from_cycles(3, {{1, 2}});

  EXPECT_EQ(compose(id, s01), s01);
  // 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
  EXPECT_EQ(compose(s01, s12), Permutation({2, 0, 1}));
  EXPECT_EQ(compose(s01, s12).to_cycle_string(), "(0 2 1)");
  EXPECT_EQ(compose(s12, s01).to_cycle_string(), "(0 1 2)");
}

TEST(PermutationTest, ComposeRejectsDegreeMismatch) {
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)),
               DegreeMismatch);
}

TEST(PermutationTest, InverseAndOrder) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Point> images(1 + trial % 9);
    std::iota(images.begin(), images.end(), Point{0});
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation p(images);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_TRUE(compose(inverse(p), p).is_identity());
    EXPECT_TRUE(power(p, p.order()).is_identity());
    for (std::uint64_t k = 1; k < p.order(); ++k) {
      EXPECT_FALSE(power(p, k).is_identity());
    }
  }
  EXPECT_EQ(Permutation::from_cycles(6, {{0, 1}, {2, 3, 4}}).order(), 6u);
  EXPECT_EQ(Permutation::identity(0).order(), 1u);
}

TEST(PermutationTest, CycleString) {
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
  EXPECT_EQ(Permutation({1, 0, 3, 4, 2}).to_cycle_string(), "(0 1)(2 3 4)");
  EXPECT_EQ(Permutation::from_cycles(5, {{4, 2, 3}}).to_cycle_string(), "(2 3 4)");
}

TEST(PermutationTest, ConjugateRelabelsPoints) {
  const auto q = Permutation::from_cycles(4, {{0, 1}});
  const auto relabel = Permutation({2, 3, 0, 1});
  EXPECT_EQ(conjugate(q, relabel), Permutation::from_cycles(4, {{2, 3}}));
}
