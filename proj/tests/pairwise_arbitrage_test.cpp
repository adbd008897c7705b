#include <gtest/gtest.h>

#include <random>

#include "hvdc/errors.hpp"
#include "hvdc/pairwise_arbitrage.hpp"
#include "oracles.hpp"

using namespace hvdc;

TEST(FlowCondition, CelticRatio) { EXPECT_TRUE(flow_condition(100, 50, 0.0575)); }

TEST(FlowCondition, StrictAtThreshold) {
    EXPECT_FALSE(flow_condition(100, 100, 0.0));
    EXPECT_FALSE(flow_condition(100 / (1 - 0.05), 100, 0.05));
}

TEST(FlowCondition, NonPositivePricesAreOutOfDomain) {
    EXPECT_THROW(flow_condition(100, 0, 0.01), DomainError);
    EXPECT_THROW(flow_condition(-5, 10, 0.01), DomainError);
    EXPECT_THROW(flow_condition(10, 5, 1.0), DomainError);
}

TEST(MarginalValue, Examples) {
    EXPECT_DOUBLE_EQ(marginal_value(100, 50, 0.0575), 44.25);
    for (double p : {0.0, 1.0, 57.3, 1e4}) EXPECT_EQ(marginal_value(p, p, 0.03), 0.0);
    EXPECT_NEAR(marginal_value(100, 120, 0.00635), 19.238, 1e-12);
    // the same figure from first principles, both directions enumerated
    const auto best = oracle::best_of_three(100, 120, 0.00635, 1.0, 0.0, 1.0);
    EXPECT_EQ(best.choice, oracle::Choice::SendAToB);
    EXPECT_NEAR(best.profit, 19.238, 1e-12);
}

TEST(PairwiseProfit, CaseStudyLinks) {
    EXPECT_DOUBLE_EQ(pairwise_profit(100, 50, 0.0575, 700, 1), 30975);
    EXPECT_DOUBLE_EQ(pairwise_profit(100, 75, 0.0261, 500, 1), 11195);
    EXPECT_DOUBLE_EQ(pairwise_profit(100, 75, 0.02, 500, 1), 11500);
}

TEST(PairwiseProfit, DurationScalesLinearly) {
    EXPECT_DOUBLE_EQ(pairwise_profit(100, 50, 0.0575, 700, 0.25), 30975 / 4.0);
}

TEST(PairwiseProfit, RejectsNegativeQuantity) {
    EXPECT_THROW(pairwise_profit(100, 50, 0.0575, -1, 1), DomainError);
    EXPECT_THROW(pairwise_profit(100, 50, 0.0575, 1, 0), DomainError);
    EXPECT_THROW(pairwise_profit_biased(100, 50, 0.0575, 1, -1, 1), DomainError);
}

TEST(PairwiseProfitBiased, Examples) {
    EXPECT_EQ(pairwise_profit_biased(100, 50, 0.0575, 700, 44.25, 1), 0.0);
    EXPECT_DOUBLE_EQ(pairwise_profit_biased(100, 50, 0.0575, 700, 4.25, 1), 28000);
}

TEST(OptimalFlow, CelticSendsTowardIreland) {
    // Ireland is endpoint A, France endpoint B.
    const auto d = optimal_flow(100, 50, 0.0575, 700, 0, 1, 1);
    EXPECT_EQ(d.direction, Direction::BToA);
    EXPECT_EQ(d.quantity_mw, 700);
    EXPECT_DOUBLE_EQ(d.profit, 30975);
}

TEST(OptimalFlow, MoyleSendsTowardScotland) {
    const auto d = optimal_flow(100, 120, 0.00635, 500, 0, 1, 4);
    EXPECT_EQ(d.direction, Direction::AToB);
    EXPECT_EQ(d.quantity_mw, 500);
    EXPECT_NEAR(d.profit, 9619, 1e-9);
    EXPECT_EQ(d.timestep, 4);
}

TEST(OptimalFlow, EqualPricesIdle) {
    for (double r : {0.0, 0.01, 0.3}) {
        const auto d = optimal_flow(80, 80, r, 1000, 0, 1, 0);
        EXPECT_EQ(d.direction, Direction::Idle);
        EXPECT_EQ(d.quantity_mw, 0.0);
        EXPECT_EQ(d.profit, 0.0);
    }
}

TEST(OptimalFlow, ZeroCapacityIsIdle) {
    const auto d = optimal_flow(100, 50, 0.0575, 0, 0, 1, 0);
    EXPECT_EQ(d.direction, Direction::Idle);
    EXPECT_DOUBLE_EQ(d.marginal_value, 44.25);
    EXPECT_EQ(d.profit, 0.0);
}

TEST(OptimalFlow, NegativeOriginPrice) {
    // paid to take power at B, paid again to deliver it at A
    const auto d = optimal_flow(40, -30, 0.1, 100, 0, 1, 0);
    EXPECT_EQ(d.direction, Direction::BToA);
    EXPECT_DOUBLE_EQ(d.marginal_value, 40 + 30 - 4.0);
}

TEST(OptimalFlow, BothMarginsPositiveWithNegativePrices) {
    // with a negative price sum both directions can pay; the larger margin wins
    const auto d = optimal_flow(-100, -95, 0.1, 10, 0, 1, 0);
    const auto best = oracle::best_of_three(-100, -95, 0.1, 10, 0, 1);
    EXPECT_NEAR(d.profit, best.profit, 1e-9);
    EXPECT_EQ(d.direction, best.choice == oracle::Choice::SendAToB ? Direction::AToB : Direction::BToA);
    // exact tie at equal negative prices goes A to B
    EXPECT_EQ(optimal_flow(-50, -50, 0.2, 10, 0, 1, 0).direction, Direction::AToB);
}

TEST(OptimalFlow, DecisionInvariants) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> price(-50, 200), loss(0, 0.2), cap(0, 1000), bias(0, 20);
    for (int k = 0; k < 10000; ++k) {
        const auto d = optimal_flow(price(rng), price(rng), loss(rng), cap(rng), bias(rng), 1.0, k);
        EXPECT_EQ(d.quantity_mw == 0.0, d.direction == Direction::Idle);
        EXPECT_GE(d.marginal_value, 0.0);
        EXPECT_EQ(d.profit, d.quantity_mw * d.marginal_value * 1.0);
    }
}

TEST(OptimalFlow, MatchesBruteForceOverThreeAlternatives) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> price(-50, 200), loss(0, 0.2), cap(0, 1000), bias(0, 20), dur(0.25, 2);
    for (int k = 0; k < 10000; ++k) {
        const double pa = price(rng), pb = price(rng), r = loss(rng), x = cap(rng), rb = bias(rng), h = dur(rng);
        const auto d = optimal_flow(pa, pb, r, x, rb, h, k);
        const auto best = oracle::best_of_three(pa, pb, r, x, rb, h);
        const double scale = x * h * std::max({std::abs(pa), std::abs(pb), 1.0});
        ASSERT_TRUE(oracle::close(d.profit, best.profit, 1e-9, scale)) << pa << ' ' << pb << ' ' << r;
    }
}
