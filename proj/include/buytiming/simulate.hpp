#pragma once

// Monte Carlo oracle that plays the market rules directly: a Poisson
// population, independent mixed arrival choices, random allocation of the
// single unit, and search costs charged on every visit. Used to certify the
// analytic equilibria and profit formulas against an implementation that
// shares none of their closed forms.

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "buytiming/detail/rng.hpp"
#include "buytiming/market.hpp"

namespace buytiming {

struct SimConfig {
    std::uint64_t replications = 10000;
    std::uint64_t seed = 0;
    bool antithetic = false;  // pairs replication 2i+1 with the mirrored draws of 2i
};

struct SimEstimate {
    double mean = 0.0;
    double std_error = 0.0;  // sample std / sqrt(n)
    std::uint64_t n = 0;
};

namespace detail {

// Neumaier-compensated running sum; keeps long constant streams exact.
struct KahanSum {
    double sum = 0.0, comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Welford running mean and second moment.
struct MeanAccumulator {
    double mean = 0.0, m2 = 0.0;
    std::uint64_t n = 0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    SimEstimate estimate() const {
        double se = 0.0;
        if (n > 1) se = std::sqrt(std::max(0.0, m2 / static_cast<double>(n - 1)) /
                                  static_cast<double>(n));
        return SimEstimate{n ? mean : 0.0, se, n};
    }
};

// Per-arrival mean utility: sum of realized utilities over sum of arrivals.
// The standard error comes from the linearized residuals num - theta*den,
// whose per-replication mean is zero by construction.
struct RatioAccumulator {
    KahanSum sum_num, sum_den, sum_nn, sum_nd, sum_dd;
    std::uint64_t n = 0;

    void add(double num, double den) {
        sum_num.add(num);
        sum_den.add(den);
        sum_nn.add(num * num);
        sum_nd.add(num * den);
        sum_dd.add(den * den);
        ++n;
    }
    SimEstimate estimate() const {
        const double den_total = sum_den.value();
        if (!(den_total > 0.0) || n < 1) return SimEstimate{0.0, 0.0, n};
        const double theta = sum_num.value() / den_total;
        double se = 0.0;
        if (n > 1) {
            const double resid_sq = std::max(
                0.0, sum_nn.value() - 2.0 * theta * sum_nd.value() +
                         theta * theta * sum_dd.value());
            const double var = resid_sq / static_cast<double>(n - 1);
            const double mean_den = den_total / static_cast<double>(n);
            se = std::sqrt(var / static_cast<double>(n)) / mean_den;
        }
        return SimEstimate{theta, se, n};
    }
};

}  // namespace detail

struct MarketEstimates {
    SimEstimate u0;      // realized utility per period-0 arrival
    SimEstimate u1;      // realized utility per period-1 arrival
    SimEstimate profit;  // price collected per replication
    SimEstimate welfare; // aggregate consumer surplus per replication, raw units
};

struct DeviationEstimates {
    SimEstimate arrive0;  // tagged consumer arriving in period 0
    SimEstimate arrive1;  // tagged consumer arriving in period 1
};

struct DeviationGains {
    SimEstimate arrive0;
    SimEstimate arrive1;
    SimEstimate stay_out;
};

// Plays the whole market per replication: N ~ Poisson(lambda) consumers, each
// arriving in period 0 with probability q0, period 1 with q1, else staying
// out; the unit goes uniformly to a period-0 arrival if any, otherwise to a
// period-1 arrival. Identical seeds give bit-identical estimates.
inline MarketEstimates simulate_market(const MarketParams& mp, const MixedStrategy& st,
                                       const SimConfig& cfg) {
    validate(mp);
    validate(st);
    if (mp.demand.is_unbounded())
        throw std::invalid_argument(
            "simulate_market: finite demand required; use deviation_payoffs for unbounded demand");
    if (cfg.replications < 1)
        throw std::invalid_argument("simulate_market: replications must be >= 1");

    const double lambda = mp.demand.intensity;
    const double gain0 = mp.V - mp.K - mp.P;
    const double gain1 = mp.V - mp.P;

    detail::MeanAccumulator profit, welfare;
    detail::RatioAccumulator u0, u1;
    for (std::uint64_t r = 0; r < cfg.replications; ++r) {
        detail::ReplicationRng rng(cfg.seed, cfg.antithetic ? r / 2 : r,
                                   cfg.antithetic && (r & 1));
        const std::uint64_t pop = rng.poisson(lambda);
        std::uint64_t n0 = 0, n1 = 0;
        for (std::uint64_t i = 0; i < pop; ++i) {
            const double z = rng.uniform();
            if (z < st.q0)
                ++n0;
            else if (z < st.q0 + st.q1)
                ++n1;
        }
        const bool sold0 = n0 > 0;
        const bool sold1 = !sold0 && n1 > 0;
        profit.add(sold0 || sold1 ? mp.P : 0.0);
        welfare.add((sold0 ? gain0 : 0.0) + (sold1 ? gain1 : 0.0) -
                    mp.c * static_cast<double>(n0 + n1));
        u0.add(-mp.c * static_cast<double>(n0) + (sold0 ? gain0 : 0.0),
               static_cast<double>(n0));
        u1.add(-mp.c * static_cast<double>(n1) + (sold1 ? gain1 : 0.0),
               static_cast<double>(n1));
    }
    return MarketEstimates{u0.estimate(), u1.estimate(), profit.estimate(), welfare.estimate()};
}

// Tagged-consumer payoffs against Poisson competitor counts at the given
// intensities. A tagged period-0 arrival beats j rivals with probability
// 1/(j+1); a period-1 arrival needs an empty period 0 first. Works for
// finite-demand profiles and unbounded-demand rates alike.
inline DeviationEstimates deviation_payoffs(const ArrivalProfile& rates, const MarketParams& mp,
                                            const SimConfig& cfg) {
    validate(rates);
    validate(mp);
    if (cfg.replications < 1)
        throw std::invalid_argument("deviation_payoffs: replications must be >= 1");

    const double gain0 = mp.V - mp.K - mp.P;
    const double gain1 = mp.V - mp.P;
    detail::MeanAccumulator a0, a1;
    for (std::uint64_t r = 0; r < cfg.replications; ++r) {
        detail::ReplicationRng rng(cfg.seed, cfg.antithetic ? r / 2 : r,
                                   cfg.antithetic && (r & 1));
        const std::uint64_t n0 = rng.poisson(rates.lambda0);
        const std::uint64_t n1 = rng.poisson(rates.lambda1);
        a0.add(-mp.c + gain0 / static_cast<double>(n0 + 1));
        a1.add(-mp.c + (n0 == 0 ? gain1 / static_cast<double>(n1 + 1) : 0.0));
    }
    return DeviationEstimates{a0.estimate(), a1.estimate()};
}

// Estimated gain of each pure deviation over the candidate strategy's own
// payoff q0*U0 + q1*U1. At an equilibrium no gain should exceed a few
// standard errors above zero. Correlations between the deviations are kept
// by differencing within each replication.
inline DeviationGains deviation_gains(const ArrivalProfile& rates, const MarketParams& mp,
                                      const MixedStrategy& st, const SimConfig& cfg) {
    validate(rates);
    validate(mp);
    validate(st);
    if (cfg.replications < 1)
        throw std::invalid_argument("deviation_gains: replications must be >= 1");

    const double gain0 = mp.V - mp.K - mp.P;
    const double gain1 = mp.V - mp.P;
    detail::MeanAccumulator g0, g1, gout;
    for (std::uint64_t r = 0; r < cfg.replications; ++r) {
        detail::ReplicationRng rng(cfg.seed, cfg.antithetic ? r / 2 : r,
                                   cfg.antithetic && (r & 1));
        const std::uint64_t n0 = rng.poisson(rates.lambda0);
        const std::uint64_t n1 = rng.poisson(rates.lambda1);
        const double x0 = -mp.c + gain0 / static_cast<double>(n0 + 1);
        const double x1 = -mp.c + (n0 == 0 ? gain1 / static_cast<double>(n1 + 1) : 0.0);
        const double played = st.q0 * x0 + st.q1 * x1;
        g0.add(x0 - played);
        g1.add(x1 - played);
        gout.add(-played);
    }
    return DeviationGains{g0.estimate(), g1.estimate(), gout.estimate()};
}

}  // namespace buytiming
