#include "buytiming/infinite.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "buytiming/detail/math.hpp"
#include "buytiming/reference.hpp"
#include "buytiming/verify.hpp"

using namespace buytiming;

TEST(UOfK, PinnedValues) {
    EXPECT_EQ(u_of_k(0.0), 1.0);
    EXPECT_NEAR(u_of_k(2.0), 3.81449, 1e-4);
    EXPECT_NEAR(u_of_k(2.0), 3.8144908078954591, 1e-10);
}

TEST(UOfK, SatisfiesDefiningEquation) {
    for (double k : {0.25, 1.0, 3.7, 10.0}) {
        const double u = u_of_k(k);
        EXPECT_NEAR(u - detail::log_ratio(u), k, 1e-10) << "k=" << k;
    }
    EXPECT_THROW(u_of_k(-0.5), std::domain_error);
}

TEST(UOfK, StrictlyIncreasing) {
    double prev = u_of_k(0.0);
    for (int i = 1; i <= 100; ++i) {
        const double u = u_of_k(10.0 * i / 100);
        EXPECT_GT(u, prev);
        prev = u;
    }
}

TEST(ClassifyRegion, Examples) {
    EXPECT_EQ(classify_region(NormalizedMarket{0.5, 1.0, 0.0}), 1);
    EXPECT_EQ(classify_region(NormalizedMarket{1.5, 2.0, 0.0}), 2);
    EXPECT_EQ(classify_region(NormalizedMarket{10.0, 2.0, 6.5}), 3);
    EXPECT_EQ(classify_region(NormalizedMarket{10.0, 2.0, 0.0}), 4);
}

TEST(ClassifyRegion, BoundariesResolveToClosedRegion) {
    EXPECT_EQ(classify_region(NormalizedMarket{1.0, 2.0, 0.0}), 2);         // v-p = 1
    EXPECT_EQ(classify_region(NormalizedMarket{3.0, 2.0, 0.0}), 2);         // v-p = k+1
    const double u = u_of_k(2.0);
    EXPECT_EQ(classify_region(NormalizedMarket{u, 2.0, 0.0}), 4);           // v-p = u
    EXPECT_THROW(classify_region(NormalizedMarket{1.0, 0.0, 2.0}), std::domain_error);
}

TEST(Lambda0ClosedForm, Values) {
    EXPECT_EQ(lambda0_closed_form(1.0), 0.0);
    const double border = u_of_k(2.0) - 2.0;
    EXPECT_NEAR(lambda0_closed_form(border), 1.3388071847655196, 1e-9);
    EXPECT_NEAR(lambda0_closed_form(2.0), reference::arrival_rate_from_e1(2.0), 1e-10);
    EXPECT_THROW(lambda0_closed_form(0.999), std::domain_error);
}

TEST(Lambda0ClosedForm, SolvesE1) {
    for (double v0 : {1.2, 2.0, 5.5, 21.0}) {
        const double l0 = lambda0_closed_form(v0);
        EXPECT_NEAR(v0, l0 / -std::expm1(-l0), 1e-10) << "v0=" << v0;
    }
}

TEST(Lambda1Region2, Values) {
    EXPECT_EQ(lambda1_region2(1.0), 0.0);
    EXPECT_NEAR(lambda1_region2(1.0 / (1.0 - std::exp(-1.0))), 1.0, 1e-10);
    EXPECT_NEAR(lambda1_region2(2.0), reference::arrival_rate_from_e2(2.0, 0.0), 1e-10);
    EXPECT_THROW(lambda1_region2(0.9), std::domain_error);
}

TEST(Lambda1Region3, BorderLimits) {
    // toward the 2/3 border the rate approaches W[-(k+1)e^{-(k+1)}] + k + 1
    const double w_plus = lambert_w0(-3.0 * std::exp(-3.0)) + 3.0;
    EXPECT_NEAR(lambda1_region3(NormalizedMarket{10.0, 2.0, 7.0 - 1e-8}), w_plus, 1e-6);
    // toward the 3/4 border the rate vanishes
    const double u = u_of_k(2.0);
    EXPECT_NEAR(lambda1_region3(NormalizedMarket{u - 1e-8, 2.0, 0.0}), 0.0, 1e-6);
}

TEST(Lambda1Region3, MatchesDampedOracle) {
    const NormalizedMarket nm{3.5, 2.0, 0.0};
    const auto ref = reference::solve_rates_damped(nm);
    EXPECT_NEAR(lambda1_region3(nm), ref.lambda1, 1e-10);
}

TEST(Lambda1Region3, RejectsOtherRegions) {
    EXPECT_THROW(lambda1_region3(NormalizedMarket{2.0, 2.0, 0.0}), std::domain_error);
    EXPECT_THROW(lambda1_region3(NormalizedMarket{10.0, 2.0, 0.0}), std::domain_error);
}

TEST(SolveRates, RegionDispatch) {
    const auto r1 = solve_rates(NormalizedMarket{0.9, 1.0, 0.0});
    EXPECT_EQ(r1.lambda0, 0.0);
    EXPECT_EQ(r1.lambda1, 0.0);

    const auto r2 = solve_rates(NormalizedMarket{10.0, 2.0, 7.0});  // v-p = k+1
    EXPECT_EQ(r2.lambda0, 0.0);
    EXPECT_NEAR(r2.lambda1, 2.8214393721220787, 1e-12);

    const auto r4 = solve_rates(NormalizedMarket{10.0, 2.0, 0.0});
    EXPECT_NEAR(r4.lambda0, 7.997309067593509, 1e-9);
    EXPECT_EQ(r4.lambda1, 0.0);
    EXPECT_NEAR(8.0, r4.lambda0 / -std::expm1(-r4.lambda0), 1e-10);
}

TEST(SolveRates, UtilitiesMatchRegionSigns) {
    const auto utilities_at = [](const NormalizedMarket& nm) {
        const MarketParams mp{1.0, nm.k, nm.v, nm.p, Demand::unbounded()};
        return expected_utilities(mp, solve_rates(nm));
    };
    const auto r2 = utilities_at(NormalizedMarket{1.5, 2.0, 0.0});
    EXPECT_NEAR(r2.u1, 0.0, 1e-9);
    EXPECT_LE(r2.u0, 1e-9);
    const auto r3 = utilities_at(NormalizedMarket{3.5, 2.0, 0.0});
    EXPECT_NEAR(r3.u0, 0.0, 1e-9);
    EXPECT_NEAR(r3.u1, 0.0, 1e-9);
    const auto r4 = utilities_at(NormalizedMarket{10.0, 2.0, 0.0});
    EXPECT_NEAR(r4.u0, 0.0, 1e-9);
    EXPECT_LE(r4.u1, 1e-9);
}

TEST(InfiniteInvariants, SuitePasses) {
    for (const auto& r : verify::run_infinite_checks(verify::Options{}))
        EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}
