#include "zariski/witness.hpp"

#include <gtest/gtest.h>

#include "zariski/error.hpp"
#include "zariski/random.hpp"

namespace zariski {
namespace {

using P = FinPermutation;

const SymOmega kSym;
const P kId{};
const P kT01 = P::transposition(0, 1);
const P kC3 = P::from_pairs({{0, 1}, {1, 2}, {2, 0}});

PermPair pair(std::vector<std::vector<P>> a, std::vector<std::vector<P>> b) {
  return PermPair(PermMatrix(std::move(a)), PermMatrix(std::move(b)));
}

PermPair commutation(const P& c) { return pair({{c, kId}}, {{kId, c}}); }

TEST(WitnessTest, Separators) {
  EXPECT_EQ(pick_separators(pair({{kT01}}, {{kId, kId}})), (std::vector<Point>{0}));
  EXPECT_EQ(pick_separators(pair({{P::transposition(3, 4), kId}}, {{P::transposition(3, 5)}})),
            (std::vector<Point>{3}));
  EXPECT_THROW(pick_separators(pair({{kT01, kId}}, {{kT01}})), NotNormalized);
}

TEST(WitnessTest, ForbiddenSet) {
  EXPECT_EQ(forbidden_set(pair({{kId, kId}}, {{kId}})), (std::vector<P>{kId}));
  EXPECT_EQ(forbidden_set(pair({{kT01}}, {{kT01, kId}})), (std::vector<P>{kId, kT01}));

  const P t12 = P::transposition(1, 2);
  const auto products = forbidden_set(pair({{kT01}}, {{t12}}));
  const P expected = P::from_pairs({{0, 2}, {1, 0}, {2, 1}});
  EXPECT_NE(std::find(products.begin(), products.end(), expected), products.end());
  EXPECT_NE(std::find(products.begin(), products.end(), compose(t12, kT01)), products.end());
  // {1, (01), (12), (01)(12), (12)(01)}: both 3-cycles, both transpositions, identity.
  EXPECT_EQ(products.size(), 5u);
}

TEST(WitnessTest, SymOmegaOracle) {
  const auto oracle = symw_oracle();
  EXPECT_EQ(oracle.choose_image({}, 5, {0, 1}), Point{2});
  EXPECT_EQ(oracle.choose_image(PartialBijection::from_pairs({{1, 2}}), 0, {0, 1, 2}), Point{3});
  EXPECT_EQ(oracle.choose_image(PartialBijection::from_pairs({{1, 4}}), 0, {0, 1}), Point{2});
  EXPECT_TRUE(oracle.extendable(PartialBijection::from_pairs({{0, 9}, {9, 3}})));
  EXPECT_FALSE(oracle.choose_image(PartialBijection::from_pairs({{1, 2}}), 1, {}).has_value());
}

TEST(WitnessTest, CommutationTrace) {
  const auto p = commutation(kT01);
  const auto [g, trace] = construct_witness(p, symw_oracle());
  EXPECT_EQ(trace.separators, (std::vector<Point>{0}));
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0].side, WitnessCase::Alpha);
  EXPECT_EQ(trace.steps[0].q, 1u);
  EXPECT_EQ(trace.steps[0].image, 2u);
  EXPECT_EQ(trace.steps[1].side, WitnessCase::Beta);
  EXPECT_EQ(trace.steps[1].q, 0u);
  EXPECT_EQ(trace.steps[1].image, 3u);
  EXPECT_EQ(trace.partial, PartialBijection::from_pairs({{1, 2}, {0, 3}}));
  EXPECT_EQ(g, P::from_pairs({{0, 3}, {3, 0}, {1, 2}, {2, 1}}));
  EXPECT_EQ(compose(kT01, g).apply(0), 2u);
  EXPECT_EQ(compose(g, kT01).apply(0), 3u);
  EXPECT_TRUE(membership(p, g, kSym));
}

TEST(WitnessTest, WholeGroupRow) {
  const P sigma = P::cycle({2, 5});
  const auto p = pair({{sigma, kId}}, {{kId, kId}});
  const auto result = construct_witness(p, symw_oracle());
  EXPECT_TRUE(membership(p, result.element, kSym));
  EXPECT_TRUE(membership(p, kId, kSym));
  EXPECT_LE(result.trace.steps.size(), p.total_degree());
}

TEST(WitnessTest, UnnormalizedInputRejected) {
  const auto same = pair({{kT01, kId}}, {{kT01, kId}});
  EXPECT_EQ(normalize(same, kSym, default_adjuster()).kind, NormalFormKind::Empty);
  EXPECT_THROW(construct_witness(same, symw_oracle()), NotNormalized);
}

TEST(WitnessTest, IntersectCommutationSets) {
  const auto p1 = commutation(kT01);
  const auto p2 = commutation(kC3);
  const P g = intersect_witness(p1, p2, symw_oracle());
  EXPECT_TRUE(membership(p1, g, kSym));
  EXPECT_TRUE(membership(p2, g, kSym));
  const P h = intersect_witness(p1, p1, symw_oracle());
  EXPECT_TRUE(membership(p1, h, kSym));
}

// An oracle that refuses every extension.
class StingyOracle final : public GroupOracle {
 public:
  bool extendable(const PartialBijection& b) const override { return b.empty(); }
  std::optional<Point> choose_image(const PartialBijection&, Point,
                                    const std::set<Point>&) const override {
    return std::nullopt;
  }
  FinPermutation complete(const PartialBijection& b) const override { return extend(b); }
};

TEST(WitnessTest, ExhaustedOracle) {
  EXPECT_THROW(construct_witness(commutation(kT01), StingyOracle{}), OracleExhausted);
}

class WitnessPropertyTest : public ::testing::Test {
 protected:
  Rng rng{99};
  const PairShape shape{3, 3, 8};
};

TEST_F(WitnessPropertyTest, WitnessIsMemberAndTraceIsSound) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto [raw, p] = random_proper_pair(rng, shape, default_adjuster());
    const auto result = construct_witness(p, symw_oracle());
    const auto& trace = result.trace;
    EXPECT_TRUE(membership(p, result.element, kSym));
    EXPECT_TRUE(membership(raw, result.element, kSym));
    EXPECT_LE(trace.steps.size(), p.total_degree());
    EXPECT_TRUE(trace.partial.restricts(result.element));

    // Replay: invariants after every step, monotone counters.
    PartialBijection x;
    std::vector<std::size_t> prev_a(p.row_count(), 0), prev_b(p.row_count(), 0);
    EXPECT_TRUE(prefixes_stay_separated(p, trace.separators, x));
    for (const WitnessStep& step : trace.steps) {
      x.insert(step.q, step.image);
      EXPECT_TRUE(prefixes_stay_separated(p, trace.separators, x));
      EXPECT_TRUE(images_avoid_separators(trace.forbidden_products, trace.separators, x));
      for (std::size_t i = 0; i < p.row_count(); ++i) {
        EXPECT_GE(step.progress_a[i], prev_a[i]);
        EXPECT_GE(step.progress_b[i], prev_b[i]);
      }
      const auto& moved = step.side == WitnessCase::Alpha ? step.progress_a : step.progress_b;
      const auto& before = step.side == WitnessCase::Alpha ? prev_a : prev_b;
      EXPECT_GT(moved[step.row], before[step.row]);
      prev_a = step.progress_a;
      prev_b = step.progress_b;
    }
    EXPECT_EQ(x, trace.partial);
  }
}

TEST_F(WitnessPropertyTest, Deterministic) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto [raw, p] = random_proper_pair(rng, shape, default_adjuster());
    const auto first = construct_witness(p, symw_oracle());
    const auto second = construct_witness(p, symw_oracle());
    EXPECT_EQ(first.element, second.element);
    EXPECT_EQ(first.trace.partial, second.trace.partial);
    ASSERT_EQ(first.trace.steps.size(), second.trace.steps.size());
    for (std::size_t i = 0; i < first.trace.steps.size(); ++i) {
      EXPECT_EQ(first.trace.steps[i].q, second.trace.steps[i].q);
      EXPECT_EQ(first.trace.steps[i].image, second.trace.steps[i].image);
    }
  }
}

TEST_F(WitnessPropertyTest, Hyperconnected) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto [raw1, p1] = random_proper_pair(rng, shape, default_adjuster());
    const auto [raw2, p2] = random_proper_pair(rng, shape, default_adjuster());
    const P g = intersect_witness(p1, p2, symw_oracle());
    EXPECT_TRUE(membership(raw1, g, kSym) && membership(raw2, g, kSym));
  }
}

}  // namespace
}  // namespace zariski
