#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "twoclosure/errors.hpp"
#include "twoclosure/fixtures.hpp"
#include "twoclosure/oracle.hpp"
#include "twoclosure/reduction.hpp"

using namespace twoclosure;

TEST(OracleTest, Examples) {
  EXPECT_EQ(two_closure(PermGroup::trivial(5)).order(), 1u);
  const PermGroup c4 = fixtures::regular_cyclic(4);
  EXPECT_EQ(two_closure(c4), c4);
  EXPECT_EQ(two_closure(fixtures::example1(2)).order(), 8u);
  EXPECT_EQ(two_closure(PermGroup()).order(), 1u);
}

TEST(OracleTest, ClosednessExamples) {
  EXPECT_TRUE(is_2_closed_oracle(fixtures::regular_cyclic(6)));
  EXPECT_FALSE(is_2_closed_oracle(fixtures::example1(2)));
  EXPECT_FALSE(is_2_closed_oracle(fixtures::example2(2)));
}

TEST(OracleTest, NonAbelianInput) {
  const PermGroup sym3(3, {Permutation::from_cycles(3, {{0, 1}}),
                           Permutation::from_cycles(3, {{0, 1, 2}})});
  EXPECT_EQ(two_closure(sym3).order(), 6u);
  // C_3 acting regularly: 2-closed.
  EXPECT_TRUE(is_2_closed_oracle(fixtures::regular_cyclic(3)));
}

TEST(OracleTest, LimitsRaise) {
  SearchLimits tight;
  tight.max_nodes = 3;
  EXPECT_THROW(two_closure(fixtures::example1(2), tight), BudgetExceeded);
  EXPECT_THROW(two_closure_serial(fixtures::example1(2), tight), BudgetExceeded);

  SearchLimits small_degree;
  small_degree.max_degree = 5;
  EXPECT_THROW(two_closure(fixtures::example1(2), small_degree), BudgetExceeded);

  SearchLimits few_elements;
  few_elements.element_cap = 4;
  EXPECT_THROW(two_closure(fixtures::example1(2), few_elements), CapExceeded);
}

TEST(OracleTest, MatchesExhaustiveSearch) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PermGroup g = fixtures::random_abelian(seed, 7);
    const std::size_t n = g.degree();
    const auto labels = brute::pair_labels(n, brute::closure(n, g.generators()));
    EXPECT_EQ(brute::as_set(two_closure(g).elements()),
              brute::closure_by_exhaustion(n, labels))
        << "seed " << seed;
  }
}

TEST(OracleTest, ParallelMatchesSerial) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const PermGroup g = fixtures::random_abelian(seed, 10);
    EXPECT_EQ(two_closure(g).elements(), two_closure_serial(g).elements());
  }
  const PermGroup ex2 = fixtures::example2(2);
  EXPECT_EQ(two_closure(ex2).elements(), two_closure_serial(ex2).elements());
}

TEST(OracleTest, ClosureLaws) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PermGroup g = fixtures::random_abelian(seed, 10);
    const PermGroup closure = two_closure(g);
    EXPECT_TRUE(is_subgroup(g, closure));
    EXPECT_EQ(two_closure(closure), closure);
    EXPECT_TRUE(same_coloring(orb2(g), orb2(closure)));
    EXPECT_TRUE(is_quasiregular(closure));
  }
}

TEST(OracleTest, ZelLiesInClosure) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PermGroup g = fixtures::random_abelian(seed, 10);
    if (orbits(g).size() < 2) continue;
    EXPECT_TRUE(is_subgroup(zel(g), two_closure(g))) << "seed " << seed;
  }
}
