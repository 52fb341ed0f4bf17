#include "zariski/ragged.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "zariski/random.hpp"
#include "zariski/witness.hpp"

namespace zariski {
namespace {

using P = FinPermutation;
using testing::dense;
using testing::dense_product;

const SymOmega kSym;
const P kId{};
const P kT01 = P::transposition(0, 1);
const P kT12 = P::transposition(1, 2);
const P kT02 = P::transposition(0, 2);
const P kT23 = P::transposition(2, 3);

PermPair pair(std::vector<std::vector<P>> a, std::vector<std::vector<P>> b) {
  return PermPair(PermMatrix(std::move(a)), PermMatrix(std::move(b)));
}

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

TEST(RaggedTest, RowEval) {
  PermMatrix m({{kT01}, {kId, kId}, {kT01, kId, kT12}});
  EXPECT_EQ(row_eval(m, 0, kT23, kSym), kT01);
  EXPECT_EQ(row_eval(m, 1, kT23, kSym), kT23);
  const P v = row_eval(m, 2, kT02, kSym);
  EXPECT_EQ(dense(v, 3), dense_product({dense(kT01, 3), dense(kT02, 3), dense(kId, 3),
                                        dense(kT02, 3), dense(kT12, 3)},
                                       3));
  EXPECT_EQ(v, P::from_pairs({{0, 2}, {1, 0}, {2, 1}}));
  EXPECT_THROW(row_eval(m, 3, kId, kSym), IndexOutOfRange);
}

TEST(RaggedTest, Membership) {
  const auto same = pair({{kT01, kT12}}, {{kT01, kT12}});
  for (const P& x : {kId, kT01, kT02, P::cycle({0, 1, 2, 3})}) {
    EXPECT_FALSE(membership(same, x, kSym));
  }
  const auto commute = pair({{kT01, kId}}, {{kId, kT01}});
  EXPECT_FALSE(membership(commute, kId, kSym));
  EXPECT_TRUE(membership(commute, P::from_pairs({{0, 3}, {3, 0}, {1, 2}, {2, 1}}), kSym));
}

TEST(RaggedTest, Shapes) {
  EXPECT_THROW(PermMatrix(std::vector<std::vector<P>>{}), InvalidMatrix);
  EXPECT_THROW(PermMatrix({{kId}, {}}), InvalidMatrix);
  EXPECT_THROW(pair({{kId}}, {{kId}, {kId}}), InvalidMatrix);
}

TEST(RaggedTest, Stack) {
  const auto one = pair({{kT01, kId}}, {{kId, kT01}});
  const auto two = pair({{kT12}, {kId, kId}}, {{kT12, kId}, {kT02}});
  EXPECT_EQ(stack(one, two).row_count(), 3u);
  const auto doubled = stack(one, one);
  EXPECT_EQ(doubled.row_count(), 2u);

  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const P x = random_permutation(rng, 4);
    EXPECT_EQ(membership(doubled, x, kSym), membership(one, x, kSym));
    EXPECT_EQ(membership(stack(one, two), x, kSym),
              membership(one, x, kSym) && membership(two, x, kSym));
  }
}

TEST(RaggedTest, Signature) {
  EXPECT_EQ(signature(pair({{kT01, kId}}, {{kId, kT01}})), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(signature(pair({{kT01}, {kId, kT01, kT12}}, {{kId, kT01}, {kT02}})),
            (std::vector<std::size_t>{2, 0, 2, 1, 0}));
}

TEST(RaggedTest, NormalizeEqualConstantsIsEmpty) {
  auto nf = normalize(pair({{kT01}}, {{kT01}}), kSym, default_adjuster());
  EXPECT_EQ(nf.kind, NormalFormKind::Empty);
}

TEST(RaggedTest, NormalizeCancelsThenDeletes) {
  const auto p = pair({{kT01, kT12}}, {{kT01, kT23}});
  auto traced = normalize_traced(p, kSym, default_adjuster());
  EXPECT_EQ(traced.result.kind, NormalFormKind::Full);
  ASSERT_EQ(traced.steps.size(), 2u);
  EXPECT_EQ(traced.steps[0].kind, RewriteKind::Cancel);
  EXPECT_EQ(traced.steps[1].kind, RewriteKind::DeleteRow);
  EXPECT_TRUE(lex_less(traced.steps[0].signature_after, traced.steps[0].signature_before));

  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const P x = random_permutation(rng, 1 + rng.below(8));
    EXPECT_TRUE(membership(p, x, kSym));
  }
}

TEST(RaggedTest, NormalizeAdjustsConstantSide) {
  const P a = P::cycle({0, 2, 4});
  const P b = kT12;
  const P f = default_adjuster();
  auto nf = normalize(pair({{a}}, {{a, b}}), kSym, f);
  ASSERT_EQ(nf.kind, NormalFormKind::Proper);
  EXPECT_EQ(*nf.pair, pair({{compose(a, f)}}, {{a, compose(b, f)}}));
  EXPECT_TRUE(satisfies_basis_conditions(*nf.pair));

  auto mirrored = normalize(pair({{a, b}}, {{a}}), kSym, f);
  ASSERT_EQ(mirrored.kind, NormalFormKind::Proper);
  EXPECT_EQ(*mirrored.pair, pair({{a, compose(b, f)}}, {{compose(a, f)}}));
}

TEST(RaggedTest, NormalizeRejectsIdentityAdjuster) {
  EXPECT_THROW(normalize(pair({{kT01}}, {{kT12}}), kSym, kId), InvalidAdjuster);
}

TEST(RaggedTest, NormalizeLeavesGoodPairAlone) {
  const auto p = pair({{kT01, kId}}, {{kId, kT01}});
  auto traced = normalize_traced(p, kSym, default_adjuster());
  EXPECT_TRUE(traced.steps.empty());
  ASSERT_EQ(traced.result.kind, NormalFormKind::Proper);
  EXPECT_EQ(*traced.result.pair, p);
}

// (N, +) is cancellative without inverses; the same code path must work.
TEST(RaggedTest, NormalizeOverNaturals) {
  const NaturalsUnderAddition nat;
  using M = MatrixPair<std::uint64_t>;
  using R = RaggedMatrix<std::uint64_t>;
  Rng rng(3);
  int proper = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng.below(3);
    auto draw = [&] {
      std::vector<std::vector<std::uint64_t>> m(rows);
      for (auto& row : m) {
        const std::size_t d = rng.below(3);
        for (std::size_t j = 0; j <= d; ++j) row.push_back(rng.below(3));
      }
      return R(std::move(m));
    };
    R a = draw();
    R b = draw();
    const M p(std::move(a), std::move(b));
    auto traced = normalize_traced(p, nat, std::uint64_t{1});
    if (traced.result.kind == NormalFormKind::Proper) {
      ++proper;
      EXPECT_TRUE(satisfies_basis_conditions(*traced.result.pair));
    }
    for (std::uint64_t x = 0; x < 12; ++x) {
      EXPECT_EQ(membership(p, x, nat), membership(traced.result, x, nat));
    }
  }
  EXPECT_GT(proper, 0);
}

class NormalizePropertyTest : public ::testing::Test {
 protected:
  Rng rng{20240917};
  const PairShape shape{3, 4, 8};
};

TEST_F(NormalizePropertyTest, MembershipPreserved) {
  // Entries drawn from a small pool so that equal leading coefficients and
  // cancellations actually happen.
  const std::vector<P> pool{kId, kT01, kT12, P::cycle({0, 1, 2})};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng.below(3);
    auto draw = [&] {
      std::vector<std::vector<P>> m(rows);
      for (auto& row : m) {
        const std::size_t d = rng.below(4);
        for (std::size_t j = 0; j <= d; ++j) row.push_back(pool[rng.below(pool.size())]);
      }
      return PermMatrix(std::move(m));
    };
    PermMatrix a = draw();
    PermMatrix b = draw();
    const PermPair p(std::move(a), std::move(b));
    auto traced = normalize_traced(p, kSym, default_adjuster());
    for (const RewriteStep& step : traced.steps) {
      if (step.kind == RewriteKind::Adjust) {
        EXPECT_EQ(step.signature_after, step.signature_before);
        EXPECT_LT(step.violations_after, step.violations_before);
      } else if (step.kind != RewriteKind::Contradiction) {
        EXPECT_TRUE(lex_less(step.signature_after, step.signature_before));
      }
    }
    if (traced.result.kind == NormalFormKind::Proper) {
      EXPECT_TRUE(satisfies_basis_conditions(*traced.result.pair));
    }
    for (int k = 0; k < 200; ++k) {
      const P x = random_permutation(rng, 1 + rng.below(4));
      EXPECT_EQ(membership(p, x, kSym), membership(traced.result, x, kSym));
    }
  }
}

}  // namespace
}  // namespace zariski
