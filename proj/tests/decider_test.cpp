#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "twoclosure/decider.hpp"
#include "twoclosure/errors.hpp"
#include "twoclosure/fixtures.hpp"

using namespace twoclosure;

namespace {

std::vector<StepKind> kinds(const ReductionTrace& trace) {
  std::vector<StepKind> result;
  for (const auto& step : trace.steps) result.push_back(step.kind);
  return result;
}

void check_trace_shape(const ReductionTrace& trace, std::size_t degree) {
  std::map<std::uint64_t, std::size_t> reductions;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& step = trace.steps[k];
    if (step.kind == StepKind::ZelNotInside) {
      EXPECT_FALSE(trace.verdict);
      // terminal within its Sylow chain
      if (k + 1 < trace.steps.size()) EXPECT_NE(trace.steps[k + 1].part, step.part);
    }
    if (step.kind == StepKind::ZelReduce || step.kind == StepKind::OrbitRemoval) {
      ++reductions[step.part];
      ASSERT_LT(k + 1, trace.steps.size());
      EXPECT_EQ(trace.steps[k + 1].part, step.part);
      EXPECT_LT(trace.steps[k + 1].degree, step.degree);
    }
  }
  for (const auto& [part, count] : reductions) EXPECT_LE(count, degree);
}

}  // namespace

TEST(DeciderTest, TransitiveBase) {
  const auto trace = decide_2_closed(fixtures::regular_cyclic(8));
  EXPECT_TRUE(trace.verdict);
  EXPECT_EQ(kinds(trace),
            (std::vector<StepKind>{StepKind::Validate, StepKind::TransitiveBase}));
}

TEST(DeciderTest, Example1) {
  const auto trace = decide_2_closed(fixtures::example1(3));
  EXPECT_FALSE(trace.verdict);
  EXPECT_EQ(kinds(trace),
            (std::vector<StepKind>{StepKind::Validate, StepKind::ZelNotInside}));
  EXPECT_EQ(trace.steps.back().part, 3u);
}

TEST(DeciderTest, Example2) {
  const auto trace = decide_2_closed(fixtures::example2(2));
  EXPECT_FALSE(trace.verdict);
  ASSERT_GE(trace.steps.size(), 3u);
  EXPECT_EQ(trace.steps[1].kind, StepKind::OrbitRemoval);
  EXPECT_EQ(trace.steps[1].removed, (PointSet{0, 1}));
  EXPECT_EQ(trace.steps.back().kind, StepKind::ZelNotInside);
  check_trace_shape(trace, 12);
}

TEST(DeciderTest, TrivialGroups) {
  for (std::size_t n = 0; n <= 5; ++n) {
    EXPECT_TRUE(decide_2_closed(PermGroup::trivial(n)).verdict);
  }
}

TEST(DeciderTest, RefusesNonCyclicConstituents) {
  EXPECT_THROW(decide_2_closed(fixtures::klein_regular()), PreconditionFailed);
}

TEST(DeciderTest, SylowSplit) {
  // C2 × C3 on orbits of sizes 2 and 3, plus a second orbit of size 2.
  const PermGroup g(7, {Permutation::from_cycles(7, {{0, 1}, {2, 3, 4}, {5, 6}})});
  const auto trace = decide_2_closed(g);
  ASSERT_GE(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[1].kind, StepKind::SylowSplit);
  EXPECT_EQ(trace.steps[1].primes, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE(trace.verdict);
  check_trace_shape(trace, 7);
}

TEST(DeciderTest, AgreesWithOracle) {
  std::size_t closed = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const PermGroup g = fixtures::random_abelian_cyclic(seed, 10);
    const OracleReport report = decide_with_oracle_check(g);
    EXPECT_FALSE(report.mismatch) << "seed " << seed << "\n" << render(report.trace);
    check_trace_shape(report.trace, g.degree());
    closed += report.oracle;
  }
  // both verdicts must be represented in the sample
  EXPECT_GT(closed, 10u);
  EXPECT_LT(closed, 110u);
}

TEST(DeciderTest, VerdictInvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PermGroup g = fixtures::random_abelian_cyclic(seed, 10);
    std::vector<Point> order(g.degree());
    std::iota(order.begin(), order.end(), Point{0});
    std::shuffle(order.begin(), order.end(), rng);
    const PermGroup h = relabel(g, Permutation(order));
    EXPECT_EQ(decide_2_closed(g).verdict, decide_2_closed(h).verdict);
  }
}

TEST(DeciderTest, OracleReport) {
  const auto ex1 = decide_with_oracle_check(fixtures::example1(2));
  EXPECT_FALSE(ex1.criterion);
  EXPECT_FALSE(ex1.oracle);
  EXPECT_FALSE(ex1.mismatch);
  EXPECT_EQ(ex1.closure_order, 8u);

  const auto c6 = decide_with_oracle_check(fixtures::regular_cyclic(6));
  EXPECT_TRUE(c6.criterion);
  EXPECT_TRUE(c6.oracle);
  EXPECT_FALSE(c6.mismatch);
}

TEST(DeciderTest, Rendering) {
  const auto text = render(decide_2_closed(fixtures::example1(2)));
  EXPECT_EQ(text,
            "0: Validate degree=6 order=4\n"
            "1: ZelNotInside degree=6 order=4 part=2\n"
            "verdict: not 2-closed\n");
}
