#include <gtest/gtest.h>

#include "mink/lp.hpp"
#include "test_support.hpp"

namespace mink {
namespace {

LinearConstraint le(QVec a, Rational b) { return {std::move(a), std::move(b)}; }

TEST(LpMax, BoundedInterval) {
  const LpProblem p{QVec{1}, {le(QVec{1}, 3), le(QVec{-1}, 0)}};
  const auto o = lp_max(p);
  ASSERT_EQ(o.status, LpStatus::optimal);
  EXPECT_EQ(o.optimum, 3);
  EXPECT_EQ(o.point, QVec{3});
  EXPECT_TRUE(check_certificate(p, o));
}

TEST(LpMax, CrosspolytopeSupport) {
  LpProblem p{QVec{1, 1, 1}, {}};
  for (int mask = 0; mask < 8; ++mask) {
    p.constraints.push_back(le(QVec{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1}, 1));
  }
  const auto o = lp_max(p);
  ASSERT_EQ(o.status, LpStatus::optimal);
  EXPECT_EQ(o.optimum, 1);
  EXPECT_TRUE(check_certificate(p, o));
}

TEST(LpMax, Infeasible) {
  const LpProblem p{QVec{1}, {le(QVec{1}, 1), le(QVec{-1}, -2)}};
  EXPECT_EQ(lp_max(p).status, LpStatus::infeasible);
}

TEST(LpMax, Unbounded) {
  const LpProblem p{QVec{1, 0}, {le(QVec{0, 1}, 1)}};
  EXPECT_EQ(lp_max(p).status, LpStatus::unbounded);
}

TEST(LpMax, NoConstraints) {
  EXPECT_EQ(lp_max(LpProblem{QVec{1, 0}, {}}).status, LpStatus::unbounded);
  const auto zero = lp_max(LpProblem{QVec{0, 0}, {}});
  ASSERT_EQ(zero.status, LpStatus::optimal);
  EXPECT_EQ(zero.optimum, 0);
}

TEST(LpMax, InfeasibleWithZeroObjective) {
  const LpProblem p{QVec{0, 0}, {le(QVec{1, 0}, -1), le(QVec{-1, 0}, -1)}};
  EXPECT_EQ(lp_max(p).status, LpStatus::infeasible);
}

TEST(LpMax, DegenerateVertexTerminates) {
  // Many constraints tight at the optimum (a pyramid apex); Bland's rule
  // must still terminate.
  LpProblem p{QVec{0, 0, 1}, {}};
  for (int x : {-1, 1})
    for (int y : {-1, 1}) p.constraints.push_back(le(QVec{x, y, 1}, 1));
  for (int x : {-1, 1}) p.constraints.push_back(le(QVec{x, 0, 1}, 1));
  p.constraints.push_back(le(QVec{0, 0, -1}, 0));
  const auto o = lp_max(p);
  ASSERT_EQ(o.status, LpStatus::optimal);
  EXPECT_EQ(o.optimum, 1);
  EXPECT_EQ(o.point, (QVec{0, 0, 1}));
  EXPECT_TRUE(check_certificate(p, o));
}

TEST(LpMax, DimensionMismatch) {
  EXPECT_THROW(lp_max(LpProblem{QVec{1, 1}, {le(QVec{1}, 1)}}), DomainError);
}

TEST(LpMax, Deterministic) {
  LpProblem p{QVec{1, 1}, {le(QVec{1, 1}, 2), le(QVec{-1, 0}, 0), le(QVec{0, -1}, 0)}};
  const auto a = lp_max(p);
  const auto b = lp_max(p);
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.dual_multipliers, b.dual_multipliers);
}

// Strong-duality certificates on random boxed LPs, cross-checked against
// enumeration of every basic solution.
TEST(LpMaxProperty, RandomBoxedLpsMatchVertexEnumeration) {
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::rand_int(1, 3));
    LpProblem p{testing::rand_vec(d, 5, 3), {}};
    for (std::size_t i = 0; i < d; ++i) {
      p.constraints.push_back(le(QVec::unit(d, i), 8));
      p.constraints.push_back(le(-QVec::unit(d, i), 8));
    }
    const long extra = testing::rand_int(0, 5);
    for (long k = 0; k < extra; ++k) {
      p.constraints.push_back(le(testing::rand_nonzero_vec(d, 4), testing::rand_rational(6, 3)));
    }
    std::shuffle(p.constraints.begin(), p.constraints.end(), testing::rng());
    const auto o = lp_max(p);
    const auto oracle = testing::brute_force_lp_max(p);
    if (!oracle) {
      EXPECT_EQ(o.status, LpStatus::infeasible);
      ++infeasible;
      continue;
    }
    ASSERT_EQ(o.status, LpStatus::optimal);
    EXPECT_EQ(o.optimum, *oracle);
    EXPECT_TRUE(check_certificate(p, o));
    ++optimal;
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 0);
}

TEST(LpMaxProperty, RandomUnboundedCones) {
  // A cone {x : a_i·x <= 0} with objective inside its recession directions.
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::rand_int(2, 4));
    const QVec dir = testing::rand_nonzero_vec(d, 4);
    LpProblem p{dir, {}};
    for (int k = 0; k < 4; ++k) {
      QVec a = testing::rand_nonzero_vec(d, 4);
      if (dot(a, dir) > 0) a = -a;
      p.constraints.push_back(le(a, testing::rand_int(0, 5)));
    }
    // dir is a recession direction with dir·dir > 0, so the LP is unbounded.
    EXPECT_EQ(lp_max(p).status, LpStatus::unbounded);
  }
}

}  // namespace
}  // namespace mink
