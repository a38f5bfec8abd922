#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "twoclosure/errors.hpp"
#include "twoclosure/fixtures.hpp"
#include "twoclosure/two_orbit.hpp"

using namespace twoclosure;

TEST(TwoOrbitTest, SmallExamples) {
  EXPECT_EQ(orb2(PermGroup::trivial(2)).num_colors(), 4u);

  const auto swap = orb2(PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})}));
  EXPECT_EQ(swap.num_colors(), 2u);
  EXPECT_EQ(swap(0, 0), swap(1, 1));
  EXPECT_EQ(swap(0, 1), swap(1, 0));
  EXPECT_NE(swap(0, 0), swap(0, 1));

  // Regular C_4: pair (a, b) is colored by the difference b - a mod 4.
  const auto c4 = orb2(fixtures::regular_cyclic(4));
  EXPECT_EQ(c4.num_colors(), 4u);
  for (Point a = 0; a < 4; ++a) {
    for (Point b = 0; b < 4; ++b) {
      EXPECT_EQ(c4(a, b), c4(0, (b + 4 - a) % 4));
    }
  }
}

TEST(TwoOrbitTest, CanonicalNumbering) {
  const auto c = orb2(PermGroup(3, {Permutation::from_cycles(3, {{0, 1}})}));
  // row-major first occurrences: (0,0)=0 (0,1)=1 (0,2)=2 (1,0)->1 (1,1)->0
  // (1,2)->2 (2,0)=3 (2,1)->3 (2,2)=4
  EXPECT_EQ(c.matrix(), (std::vector<Color>{0, 1, 2, 1, 0, 2, 3, 3, 4}));
}

TEST(TwoOrbitTest, Preserves) {
  const PermGroup g(3, {Permutation::from_cycles(3, {{0, 1}})});
  const auto c = orb2(g);
  EXPECT_TRUE(preserves(c, g.generators().front()));
  EXPECT_FALSE(preserves(c, Permutation::from_cycles(3, {{0, 2}})));
  EXPECT_THROW(preserves(c, Permutation::identity(4)), DegreeMismatch);

  // An extra generator of zel for the three-orbit group: shift one orbit only.
  const auto ex1 = orb2(fixtures::example1(2));
  EXPECT_TRUE(preserves(ex1, Permutation::from_cycles(6, {{0, 1}})));
}

TEST(TwoOrbitTest, SameColoring) {
  const PermGroup g = fixtures::example1(2);
  EXPECT_TRUE(same_coloring(orb2(g), orb2(g)));
  EXPECT_FALSE(same_coloring(orb2(PermGroup::trivial(3)),
                             orb2(fixtures::regular_cyclic(3))));
  EXPECT_THROW(same_coloring(orb2(PermGroup::trivial(3)),
                             orb2(PermGroup::trivial(2))),
               DegreeMismatch);
}

TEST(TwoOrbitTest, PropertiesOnRandomGroups) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const PermGroup g = fixtures::random_abelian(seed, 9);
    const std::size_t n = g.degree();
    const auto c = orb2(g);
    for (const auto& e : g.elements()) EXPECT_TRUE(preserves(c, e));

    const auto labels = brute::pair_labels(n, brute::as_set(g.elements()));
    EXPECT_EQ(c.num_colors(), brute::count_labels(labels));
    EXPECT_EQ(c, TwoOrbitColoring::from_labels(n, labels));

    // The diagonal is a union of classes and transposes of classes are classes.
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) {
        for (Point x = 0; x < n; ++x) {
          for (Point y = 0; y < n; ++y) {
            if (c(a, b) != c(x, y)) continue;
            EXPECT_EQ(a == b, x == y);
            EXPECT_EQ(c(b, a), c(y, x));
          }
        }
      }
    }
  }
}

TEST(TwoOrbitTest, TextRoundTrip) {
  const auto c = orb2(fixtures::example1(2));
  EXPECT_EQ(TwoOrbitColoring::from_text(c.to_text()), c);
  EXPECT_THROW(TwoOrbitColoring::from_text("0 1\n2\n"), ParseError);
  EXPECT_THROW(TwoOrbitColoring::from_text("0 x\n1 0\n"), ParseError);
}

TEST(TwoOrbitTest, GoldenExample1) {
  std::ifstream in(std::string(TWOCLOSURE_GOLDEN_DIR) + "/example1_p2.orb2");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(orb2(fixtures::example1(2)).to_text(), text.str());
}
