#include "buytiming/market.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "buytiming/verify.hpp"

using namespace buytiming;

TEST(ExpectedUtilities, NoCompetitionLimit) {
    const MarketParams mp{0.2, 0.4, 1.0, 0.0, Demand::finite(1.0)};
    const auto util = expected_utilities(mp, ArrivalProfile{0.0, 0.0});
    EXPECT_NEAR(util.u0, 0.4, 1e-15);
    EXPECT_NEAR(util.u1, 0.8, 1e-15);
}

TEST(ExpectedUtilities, PeriodOneCrowding) {
    const MarketParams mp{0.2, 0.0, 1.0, 0.0, Demand::finite(1.0)};
    const auto util = expected_utilities(mp, ArrivalProfile{0.0, 1.0});
    EXPECT_NEAR(util.u1, -std::expm1(-1.0) - 0.2, 1e-14);  // 0.43212...
}

TEST(ExpectedUtilities, FullMixIsNearIndifferent) {
    const MarketParams mp{0.4, 0.4, 1.0, 0.0, Demand::finite(1.0)};
    const auto util = expected_utilities(mp, ArrivalProfile{0.63, 0.37});
    EXPECT_NEAR(util.u0, util.u1, 1e-2);
}

TEST(FirmProfit, Values) {
    EXPECT_EQ(firm_profit(5.0, ArrivalProfile{0.0, 0.0}), 0.0);
    EXPECT_NEAR(firm_profit(1.0, ArrivalProfile{500.0, 500.0}), 1.0, 1e-15);
    // total rate 2.8214393721... = W[-3e^{-3}] + 3; frozen product
    EXPECT_NEAR(firm_profit(7.0, ArrivalProfile{0.0, 2.8214393721220787}),
                6.5833585349515173, 1e-12);
    EXPECT_THROW(firm_profit(-1.0, ArrivalProfile{0.0, 0.0}), std::invalid_argument);
}

TEST(SocialWelfare, TwoPeriodFixtures) {
    // c = 0.2, K = 0.4, V - P = 1 in units of c; raw welfare = c * normalized
    const NormalizedMarket nm{5.0, 2.0, 0.0};
    EXPECT_NEAR(0.2 * social_welfare_two_period(nm, ArrivalProfile{0.0, 1.0}),
                0.43212055882855771, 1e-12);
    EXPECT_NEAR(0.2 * social_welfare_two_period(nm, ArrivalProfile{1.0, 0.0}),
                0.1792723352971346, 1e-12);
    EXPECT_EQ(social_welfare_two_period(nm, ArrivalProfile{0.0, 0.0}), 0.0);
}

TEST(SocialWelfare, SinglePeriod) {
    EXPECT_EQ(social_welfare_single_period(NormalizedMarket{3.0, 0.0, 0.0}, 0.0), 0.0);
    // at the equilibrium rate v - p = l1/(1 - e^{-l1}) welfare nets to zero
    const double l1 = 0.7;
    const double v1 = l1 / -std::expm1(-l1);
    EXPECT_NEAR(social_welfare_single_period(NormalizedMarket{v1, 0.0, 0.0}, l1), 0.0, 1e-14);
}

TEST(SocialWelfare, SinglePeriodOptimum) {
    // for v - p = e the welfare-maximizing rate is ln(v-p) = 1, value e - 2
    const NormalizedMarket nm{std::exp(1.0), 0.0, 0.0};
    double best = -1e300, best_l = 0.0;
    for (int i = 0; i <= 40000; ++i) {
        const double l = 4.0 * i / 40000;
        const double sw = social_welfare_single_period(nm, l);
        if (sw > best) {
            best = sw;
            best_l = l;
        }
    }
    EXPECT_NEAR(best_l, 1.0, 2e-4);
    EXPECT_NEAR(best, std::exp(1.0) - 2.0, 1e-8);
}

TEST(Normalize, SearchCostUnits) {
    const auto nm = normalize(MarketParams{0.2, 0.4, 1.0, 0.0, Demand::finite(1.0)});
    EXPECT_DOUBLE_EQ(nm.v, 5.0);
    EXPECT_DOUBLE_EQ(nm.k, 2.0);
    EXPECT_DOUBLE_EQ(nm.p, 0.0);
    EXPECT_DOUBLE_EQ(nm.v0(), 3.0);
    EXPECT_DOUBLE_EQ(nm.v1(), 5.0);
}

TEST(Validation, RejectsBadParameters) {
    EXPECT_THROW(validate(MarketParams{0.0, 0.0, 1.0, 0.0, Demand::finite(1.0)}),
                 std::invalid_argument);
    EXPECT_THROW(validate(MarketParams{0.2, -0.1, 1.0, 0.0, Demand::finite(1.0)}),
                 std::invalid_argument);
    EXPECT_THROW(Demand::finite(0.0), std::invalid_argument);
    EXPECT_THROW(validate(MixedStrategy{0.6, 0.6}), std::invalid_argument);
    EXPECT_THROW(validate(ArrivalProfile{-0.1, 0.0}), std::invalid_argument);
    EXPECT_TRUE(Demand::unbounded().is_unbounded());
}

TEST(MarketInvariants, SuitePasses) {
    for (const auto& r : verify::run_market_checks(verify::Options{}))
        EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}
