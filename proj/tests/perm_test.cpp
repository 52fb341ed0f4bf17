#include "zariski/perm.hpp"

#include <gtest/gtest.h>

#include <set>

#include "support/oracles.hpp"
#include "zariski/error.hpp"
#include "zariski/random.hpp"

namespace zariski {
namespace {

using testing::dense;
using testing::dense_then;

FinPermutation perm(std::vector<PointPair> pairs) { return FinPermutation::from_pairs(pairs); }

TEST(PermTest, ApplyFollowsStoredMap) {
  EXPECT_EQ(FinPermutation{}.apply(5), 5u);
  EXPECT_EQ(perm({{0, 1}, {1, 0}}).apply(0), 1u);
  EXPECT_EQ(perm({{0, 1}, {1, 2}, {2, 0}}).apply(2), 0u);
  EXPECT_EQ(perm({{0, 1}, {1, 2}, {2, 0}}).apply(7), 7u);
}

TEST(PermTest, ComposeIsLeftToRight) {
  const auto sigma = perm({{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(compose(FinPermutation{}, sigma), sigma);
  EXPECT_EQ(compose(perm({{0, 1}, {1, 0}}), perm({{1, 2}, {2, 1}})),
            perm({{0, 2}, {1, 0}, {2, 1}}));
  EXPECT_TRUE(compose(sigma, invert(sigma)).is_identity());
}

TEST(PermTest, Invert) {
  EXPECT_EQ(invert(FinPermutation{}), FinPermutation{});
  EXPECT_EQ(invert(perm({{0, 1}, {1, 0}})), perm({{0, 1}, {1, 0}}));
  EXPECT_EQ(invert(perm({{0, 1}, {1, 2}, {2, 0}})), perm({{0, 2}, {1, 0}, {2, 1}}));
}

TEST(PermTest, ExtendClosesChains) {
  EXPECT_EQ(extend(PartialBijection::from_pairs({{0, 1}})), perm({{0, 1}, {1, 0}}));
  EXPECT_EQ(extend(PartialBijection::from_pairs({{0, 3}, {1, 2}})),
            perm({{0, 3}, {3, 0}, {1, 2}, {2, 1}}));
  EXPECT_EQ(extend(PartialBijection::from_pairs({{0, 1}, {1, 2}})),
            perm({{0, 1}, {1, 2}, {2, 0}}));
  // Existing cycles and fixed pairs are kept.
  EXPECT_EQ(extend(PartialBijection::from_pairs({{4, 4}, {5, 6}, {6, 5}})), perm({{5, 6}, {6, 5}}));
}

TEST(PermTest, Support) {
  EXPECT_TRUE(support(FinPermutation{}).empty());
  EXPECT_EQ(support(perm({{0, 1}, {1, 0}})), (std::vector<Point>{0, 1}));
  EXPECT_EQ(support(perm({{4, 7}, {7, 4}})), (std::vector<Point>{4, 7}));
}

TEST(PermTest, FixedPointsAreNotStored) {
  EXPECT_EQ(perm({{0, 1}, {1, 0}, {3, 3}}), FinPermutation::transposition(0, 1));
  EXPECT_EQ(FinPermutation::cycle({2}), FinPermutation{});
}

TEST(PermTest, RejectsNonBijections) {
  EXPECT_THROW(perm({{0, 1}}), InvalidPermutation);
  EXPECT_THROW(perm({{0, 1}, {0, 2}, {1, 0}}), InvalidPermutation);
  EXPECT_THROW(perm({{0, 2}, {1, 2}, {2, 0}}), InvalidPermutation);
}

TEST(PermTest, PartialBijectionRejectsCollisions) {
  PartialBijection b;
  b.insert(0, 1);
  EXPECT_THROW(b.insert(0, 2), NotInjective);
  EXPECT_THROW(b.insert(3, 1), NotInjective);
  EXPECT_EQ(b.apply(0), Point{1});
  EXPECT_FALSE(b.apply(1).has_value());
  EXPECT_TRUE(b.in_image(1));
}

TEST(PermTest, ToStringUsesCycles) {
  EXPECT_EQ(to_string(FinPermutation{}), "()");
  EXPECT_EQ(to_string(perm({{0, 1}, {1, 2}, {2, 0}, {4, 5}, {5, 4}})), "(0 1 2)(4 5)");
}

class PermPropertyTest : public ::testing::Test {
 protected:
  static constexpr Point kSupport = 9;
  Rng rng{0x5eed};
  FinPermutation draw() { return random_permutation(rng, 1 + rng.below(kSupport)); }
};

TEST_F(PermPropertyTest, AgreesWithDenseOracle) {
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = draw();
    const auto q = draw();
    EXPECT_EQ(dense(compose(p, q), kSupport), dense_then(dense(p, kSupport), dense(q, kSupport)));
    EXPECT_EQ(dense(invert(p), kSupport), testing::dense_inverse(dense(p, kSupport)));
  }
}

TEST_F(PermPropertyTest, Associativity) {
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = draw(), q = draw(), r = draw();
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
  }
}

TEST_F(PermPropertyTest, LeftToRightConvention) {
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = draw(), q = draw();
    const auto pq = compose(p, q);
    for (Point x = 0; x < kSupport + 2; ++x) EXPECT_EQ(pq.apply(x), q.apply(p.apply(x)));
  }
}

TEST_F(PermPropertyTest, SupportOfProductWithinUnion) {
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = draw(), q = draw();
    std::set<Point> both;
    for (Point x : support(p)) both.insert(x);
    for (Point x : support(q)) both.insert(x);
    for (Point x : support(compose(p, q))) EXPECT_TRUE(both.contains(x));
    for (Point x : support(p)) EXPECT_NE(p.apply(x), x);
  }
}

TEST_F(PermPropertyTest, ExtendRestrictsToInput) {
  for (int trial = 0; trial < 500; ++trial) {
    // A random injective partial map: some points of a random permutation of a
    // larger range.
    const auto source = random_permutation(rng, 12);
    PartialBijection b;
    for (Point x = 0; x < 12; ++x) {
      if (rng.coin()) b.insert(x, source.apply(x));
    }
    const auto g = extend(b);
    EXPECT_TRUE(b.restricts(g)) << b << " vs " << g;
  }
}

}  // namespace
}  // namespace zariski
