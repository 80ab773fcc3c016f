#pragma once

// Self-contained invariant suite behind the CLI `verify` subcommand. Each
// check exercises one of the library's contracts: identities of the Lambert
// branch, residuals of the defining equilibrium equations, classifier
// cross-validation, pricing-policy optimality against brute force, and Monte
// Carlo certification of the analytic equilibria.

#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "buytiming/detail/rng.hpp"
#include "buytiming/finite.hpp"
#include "buytiming/infinite.hpp"
#include "buytiming/lambert.hpp"
#include "buytiming/market.hpp"
#include "buytiming/pricing.hpp"
#include "buytiming/reference.hpp"
#include "buytiming/simulate.hpp"

namespace buytiming::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    std::uint64_t mc_replications = 20000;
    std::uint64_t seed = 20240501;
    int samples = 200;  // random draws per sampled check
};

namespace detail {

using buytiming::detail::ReplicationRng;

struct Suite {
    std::vector<CheckResult> results;

    void check(const std::string& name, bool pass, double worst = 0.0) {
        std::ostringstream os;
        os << "worst " << worst;
        results.push_back(CheckResult{name, pass, os.str()});
    }
    void check_msg(const std::string& name, bool pass, const std::string& detail) {
        results.push_back(CheckResult{name, pass, detail});
    }
};

inline double unif(ReplicationRng& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.uniform();
}

// Random normalized market whose net value v - p lies in the given region,
// inset slightly from the borders so the closed forms stay well conditioned.
inline NormalizedMarket sample_in_region(int region, ReplicationRng& rng) {
    const double k = unif(rng, 0.1, 5.0);
    const double u = u_of_k(k);
    double net = 0.0;
    switch (region) {
        case 1: net = unif(rng, 0.0, 0.999); break;
        case 2: {
            const double inset = 1e-3 * k;
            net = unif(rng, 1.0 + inset, 1.0 + k - inset);
            break;
        }
        case 3: {
            const double width = u - (k + 1.0);
            net = k + 1.0 + width * unif(rng, 1e-3, 1.0 - 1e-3);
            break;
        }
        default: net = unif(rng, u, u + 20.0); break;
    }
    const double p = unif(rng, 0.0, 3.0);
    return NormalizedMarket{net + p, k, p};
}

inline double e1_residual(const NormalizedMarket& nm, const ArrivalProfile& ap) {
    return std::abs(nm.v0() - ap.lambda0 / -std::expm1(-ap.lambda0));
}

inline double e2_residual(const NormalizedMarket& nm, const ArrivalProfile& ap) {
    return std::abs(nm.v1() - ap.lambda1 * std::exp(ap.lambda0) / -std::expm1(-ap.lambda1));
}

}  // namespace detail

inline std::vector<CheckResult> run_lambert_checks() {
    detail::Suite s;

    {  // round trip W[w e^w] = w on [-1, 5]
        double worst = 0.0;
        for (int i = 0; i <= 500; ++i) {
            const double w = -1.0 + 6.0 * i / 500;
            worst = std::max(worst, std::abs(lambert_w0(w * std::exp(w)) - w));
        }
        s.check("lambert.round_trip", worst <= 1e-10, worst);
    }
    {  // e^{-W[a]} = W[a]/a on (-1/e, 0) and (0, 3)
        double worst = 0.0;
        for (int i = 1; i < 120; ++i) {
            const double a_neg = lambert_branch_point() * (1.0 - i / 120.0);
            const double a_pos = 3.0 * i / 120.0;
            for (double a : {a_neg, a_pos}) {
                if (a == 0.0) continue;
                const double w = lambert_w0(a);
                worst = std::max(worst, std::abs(std::exp(-w) - w / a));
            }
        }
        s.check("lambert.exp_identity", worst <= 1e-10, worst);
    }
    {  // strictly increasing
        bool ok = true;
        double prev = lambert_w0(lambert_branch_point());
        for (int i = 1; i <= 400; ++i) {
            const double a = lambert_branch_point() + (8.0 - lambert_branch_point()) * i / 400;
            const double w = lambert_w0(a);
            ok = ok && (w > prev);
            prev = w;
        }
        s.check("lambert.monotone", ok);
    }
    {  // derivative vs central differences away from -1/e
        double worst = 0.0;
        const double h = 1e-6;
        for (int i = 0; i < 60; ++i) {
            const double a = -0.25 + 3.0 * i / 59;
            if (std::abs(a) < 2.0 * h) continue;
            const double fd = (lambert_w0(a + h) - lambert_w0(a - h)) / (2.0 * h);
            const double d = lambert_w0_derivative(a);
            worst = std::max(worst, std::abs(fd - d) / std::max(1.0, std::abs(d)));
        }
        s.check("lambert.derivative_fd", worst <= 1e-5, worst);
    }
    {  // R negative, increasing on (1, 6]; dR/dv0 formula vs finite differences
        bool ok = true;
        double worst = 0.0;
        double prev = r_func(1.0 + 1e-3);
        for (int i = 1; i <= 200; ++i) {
            const double v0 = 1.0 + 1e-3 + (5.0 - 1e-3) * i / 200;
            const double r = r_func(v0);
            ok = ok && r < 0.0 && r > prev;
            prev = r;
            if (v0 > 1.05) {
                const double h = 1e-6;
                const double fd = (r_func(v0 + h) - r_func(v0 - h)) / (2.0 * h);
                const double formula = -r / (r + 1.0) * (v0 - 1.0) / v0;
                worst = std::max(worst, std::abs(fd - formula) / std::max(1.0, std::abs(formula)));
            }
        }
        s.check("lambert.r_negative_increasing", ok);
        s.check("lambert.r_derivative_fd", worst <= 1e-6, worst);
    }
    {  // A strictly decreasing on (1, u-k); A(u-k) = -1/e
        bool ok = true;
        double worst = 0.0;
        for (double k : {0.5, 1.0, 2.0, 5.0}) {
            const double hi = u_of_k(k) - k;
            double prev = a_func(1.0 + 1e-9, k);
            for (int i = 1; i <= 200; ++i) {
                const double v0 = 1.0 + (hi - 1.0) * i / 200.0;
                const double a = a_func(v0, k);
                ok = ok && a < prev;
                prev = a;
            }
            worst = std::max(worst, std::abs(a_func(hi, k) - lambert_branch_point()));
        }
        s.check("lambert.a_decreasing", ok);
        s.check("lambert.a_border_value", worst <= 1e-8, worst);
    }
    {  // v0 + (v0+k) R(v0) negative inside Region 3, zero at the border
        bool ok = true;
        double worst = 0.0;
        for (double k : {0.5, 1.0, 2.0, 5.0}) {
            const double hi = u_of_k(k) - k;
            for (int i = 1; i < 200; ++i) {
                const double v0 = 1.0 + (hi - 1.0) * i / 200.0;
                ok = ok && (v0 + (v0 + k) * r_func(v0) < 0.0);
            }
            worst = std::max(worst, std::abs(hi + (hi + k) * r_func(hi)));
        }
        s.check("lambert.l2_sign", ok && worst <= 1e-8, worst);
    }
    return s.results;
}

inline std::vector<CheckResult> run_market_checks(const Options& opt) {
    detail::Suite s;

    {  // small-intensity continuity of the utility factor
        double worst = 0.0;
        const MarketParams mp{0.2, 0.4, 1.0, 0.0, Demand::finite(1.0)};
        for (int i = 0; i <= 50; ++i) {
            const double l = 1e-6 * i / 50;
            const auto [u0, u1] = expected_utilities(mp, ArrivalProfile{l, l});
            const double factor = l > 0.0 ? -std::expm1(-l) / l : 1.0;
            const double ref0 = -mp.c + (mp.V - mp.K - mp.P) * factor;
            const double ref1 = -mp.c + std::exp(-l) * (mp.V - mp.P) * factor;
            worst = std::max({worst, std::abs(u0 - ref0), std::abs(u1 - ref1)});
        }
        s.check("market.zero_intensity_continuity", worst <= 1e-10, worst);
    }
    {  // U0, U1 monotone in the crowding they face
        bool ok = true;
        const MarketParams mp{0.3, 0.25, 2.0, 0.5, Demand::finite(1.0)};
        double prev_u0 = 1e300, prev_u1 = 1e300;
        for (int i = 0; i <= 60; ++i) {
            const double l0 = 3.0 * i / 60;
            const auto [u0, u1] = expected_utilities(mp, ArrivalProfile{l0, 0.7});
            ok = ok && u0 < prev_u0 && u1 < prev_u1;
            prev_u0 = u0;
            prev_u1 = u1;
        }
        prev_u1 = 1e300;
        for (int i = 0; i <= 60; ++i) {
            const double l1 = 3.0 * i / 60;
            const double u1 = expected_utilities(mp, ArrivalProfile{0.4, l1}).u1;
            ok = ok && u1 < prev_u1;
            prev_u1 = u1;
        }
        s.check("market.utility_monotone", ok);
    }
    {  // equilibrium welfare vanishes in every region
        detail::ReplicationRng rng(opt.seed, 11);
        double worst = 0.0;
        for (int i = 0; i < opt.samples; ++i) {
            const auto nm = detail::sample_in_region(1 + i % 4, rng);
            worst = std::max(worst, std::abs(social_welfare_two_period(nm, solve_rates(nm))));
        }
        s.check("market.equilibrium_welfare_zero", worst <= 1e-8, worst);
    }
    {  // profit stays within [0, price]
        detail::ReplicationRng rng(opt.seed, 12);
        bool ok = true;
        for (int i = 0; i < opt.samples; ++i) {
            const double price = detail::unif(rng, 0.0, 10.0);
            const ArrivalProfile ap{detail::unif(rng, 0.0, 4.0), detail::unif(rng, 0.0, 4.0)};
            const double pi = firm_profit(price, ap);
            ok = ok && pi >= 0.0 && pi <= price;
        }
        s.check("market.profit_bounds", ok);
    }
    return s.results;
}

inline std::vector<CheckResult> run_finite_checks(const Options& opt) {
    detail::Suite s;

    {  // dense-grid agreement between the solver and the (c, K) classifier,
       // plus per-type uniqueness and the type-5 mass constraint
        bool match = true, unique = true;
        double worst_sum = 0.0;
        std::string mismatch;
        for (int i = 0; i < 24 && match; ++i) {
            for (int j = 0; j < 24; ++j) {
                const double c = 0.0137 + 1.171 * i / 23;
                const double K = 0.0191 + 1.163 * j / 23;
                const MarketParams mp{c, K, 1.0, 0.0, Demand::finite(1.0)};
                const auto recs = find_equilibria(mp);
                std::set<int> found;
                for (const auto& r : recs) {
                    unique = unique && found.insert(r.type).second;
                    if (r.type == 5)
                        worst_sum = std::max(worst_sum, std::abs(r.profile.total() - 1.0));
                }
                if (found != classify_ck(c, K)) {
                    match = false;
                    std::ostringstream os;
                    os << "mismatch at c=" << c << " K=" << K;
                    mismatch = os.str();
                    break;
                }
            }
        }
        s.check_msg("finite.classifier_cross_validation", match, mismatch);
        s.check("finite.per_type_uniqueness", unique);
        s.check("finite.type5_mass", worst_sum <= 1e-8, worst_sum);
    }
    {  // Monte Carlo best-response soundness on the three fixture markets
        bool ok = true;
        double worst = -1e300;
        const MarketParams fixtures[] = {
            {0.2, 0.4, 1.0, 0.0, Demand::finite(1.0)},
            {0.4, 0.37, 1.0, 0.0, Demand::finite(1.0)},
            {0.4, 0.4, 1.0, 0.0, Demand::finite(1.0)},
        };
        for (const auto& mp : fixtures) {
            for (const auto& rec : find_equilibria(mp)) {
                const MixedStrategy st{rec.profile.lambda0, rec.profile.lambda1};
                const auto gains = deviation_gains(rec.profile, mp, st,
                                                   SimConfig{opt.mc_replications, opt.seed});
                for (const auto& g : {gains.arrive0, gains.arrive1, gains.stay_out}) {
                    worst = std::max(worst, g.mean - 3.0 * g.std_error);
                    ok = ok && g.mean <= 3.0 * g.std_error;
                }
            }
        }
        s.check("finite.best_response_soundness", ok, worst);
    }
    return s.results;
}

inline std::vector<CheckResult> run_infinite_checks(const Options& opt) {
    detail::Suite s;

    {  // residuals of the defining equations at random points per region
        detail::ReplicationRng rng(opt.seed, 21);
        double worst = 0.0;
        for (int region : {2, 3, 4}) {
            for (int i = 0; i < opt.samples; ++i) {
                const auto nm = detail::sample_in_region(region, rng);
                const auto ap = solve_rates(nm);
                if (region >= 3) worst = std::max(worst, detail::e1_residual(nm, ap));
                if (region <= 3) worst = std::max(worst, detail::e2_residual(nm, ap));
            }
        }
        s.check("infinite.e1_e2_residuals", worst <= 1e-9, worst);
    }
    {  // closed forms vs damped direct solves
        detail::ReplicationRng rng(opt.seed, 22);
        double worst = 0.0;
        for (int region : {2, 3, 4}) {
            for (int i = 0; i < opt.samples; ++i) {
                const auto nm = detail::sample_in_region(region, rng);
                const auto a = solve_rates(nm);
                const auto b = reference::solve_rates_damped(nm);
                worst = std::max({worst, std::abs(a.lambda0 - b.lambda0),
                                  std::abs(a.lambda1 - b.lambda1)});
            }
        }
        s.check("infinite.closed_form_vs_oracle", worst <= 1e-8, worst);
    }
    {  // rate monotonicity in the net value, per region
        bool ok = true;
        for (double k : {0.5, 2.0}) {
            const double u = u_of_k(k);
            double prev = -1.0;
            for (int i = 1; i <= 100; ++i) {  // Region 2: lambda1 rises
                const double net = 1.0 + k * i / 101.0;
                const double l1 = solve_rates(NormalizedMarket{net, k, 0.0}, u).lambda1;
                ok = ok && l1 > prev;
                prev = l1;
            }
            double prev0 = -1.0, prev1 = 1e300;
            for (int i = 1; i < 100; ++i) {  // Region 3: lambda0 rises, lambda1 falls
                const double net = k + 1.0 + (u - k - 1.0) * i / 100.0;
                const auto ap = solve_rates(NormalizedMarket{net, k, 0.0}, u);
                ok = ok && ap.lambda0 > prev0 && ap.lambda1 < prev1;
                prev0 = ap.lambda0;
                prev1 = ap.lambda1;
            }
            prev0 = -1.0;
            for (int i = 0; i <= 100; ++i) {  // Region 4: lambda0 rises
                const double net = u + 10.0 * i / 100.0;
                const double l0 = solve_rates(NormalizedMarket{net, k, 0.0}, u).lambda0;
                ok = ok && l0 > prev0;
                prev0 = l0;
            }
        }
        s.check("infinite.rate_monotonicity", ok);
    }
    {  // aggregate rate strictly decreasing across Region 3
        bool ok = true;
        double worst = -1e300;
        for (double k : {0.5, 1.0, 2.0, 5.0, 10.0}) {
            const double u = u_of_k(k);
            double prev = 1e300;
            for (int i = 1; i <= 200; ++i) {
                const double net = k + 1.0 + (u - k - 1.0) * i / 201.0;
                const double sum = solve_rates(NormalizedMarket{net, k, 0.0}, u).total();
                worst = std::max(worst, sum - prev);
                ok = ok && sum - prev < 1e-12;
                prev = sum;
            }
        }
        s.check("infinite.aggregate_rate_decreasing", ok, worst);
    }
    {  // continuity across the region borders
        double worst = 0.0;
        for (double k : {0.5, 2.0}) {
            const double u = u_of_k(k);
            const double eps = 1e-8;
            const auto side2 = solve_rates(NormalizedMarket{k + 6.0, k, 5.0}, u);
            const auto side3lo = solve_rates(NormalizedMarket{k + 6.0, k, 5.0 - eps}, u);
            worst = std::max({worst, std::abs(side3lo.lambda0 - side2.lambda0),
                              std::abs(side3lo.lambda1 - side2.lambda1)});
            const auto side4 = solve_rates(NormalizedMarket{u + 3.0, k, 3.0}, u);
            const auto side3hi = solve_rates(NormalizedMarket{u + 3.0, k, 3.0 + eps}, u);
            worst = std::max({worst, std::abs(side3hi.lambda0 - side4.lambda0),
                              std::abs(side3hi.lambda1 - side4.lambda1)});
        }
        s.check("infinite.border_continuity", worst <= 1e-6, worst);
    }
    {  // sensitivity of the Region-3 period-1 rate to k at the 3/4 border:
       // the one-sided slope of W[A] in k equals 1/u there
        double worst = 0.0;
        bool increasing = true;
        for (double v0 : {1.2, 1.5, 2.5}) {
            const double u0 = buytiming::detail::bisect(
                [v0](double u) { return buytiming::detail::log_ratio(u) - v0; }, 1.0 + 1e-12,
                std::exp(v0) + 2.0, 1e-12, "verify u0");
            const double k0 = u0 - v0;
            const auto wa = [&](double k) { return lambert_w0(a_func(v0, k)); };
            const auto slope = [&](double h) { return (wa(k0 + h) + 1.0) / h; };
            const double h = 2e-3;
            const double richardson = 2.0 * slope(h / 2.0) - slope(h);
            worst = std::max(worst, std::abs(richardson - 1.0 / u0));
            increasing = increasing && wa(k0 + 0.2) > wa(k0 + 0.1);
        }
        s.check("infinite.border_k_slope", worst <= 1e-4, worst);
        s.check("infinite.wa_increasing_in_k", increasing);
    }
    return s.results;
}

inline std::vector<CheckResult> run_pricing_checks(const Options& opt) {
    detail::Suite s;

    {  // candidate ordering: pi4 < pi2 and pi3 <= pi2 whenever all exist
        detail::ReplicationRng rng(opt.seed, 31);
        bool ok = true;
        for (int i = 0; i < opt.samples; ++i) {
            const double k = detail::unif(rng, 0.1, 8.0);
            const double v = k + u_of_k(k) + detail::unif(rng, 0.0, 50.0);
            const double pi2 = v - 1.0 - std::log(v);
            const double pi4 = v - k - 1.0 - std::log(v - k);
            const double pi3 = (v - k - 1.0) * -std::expm1(-(w_const(k) + k + 1.0));
            ok = ok && pi4 < pi2 && pi3 <= pi2 + 1e-12;
        }
        s.check("pricing.candidate_ordering", ok);
    }
    {  // profit strictly increases in p across the Region-3 stretch
        bool ok = true;
        for (double k : {0.5, 2.0}) {
            const auto curve = profit_curve(u_of_k(k) + 1.0, k, 2001);
            for (std::size_t i = 1; i < curve.size(); ++i)
                if (curve[i].region == 3 && curve[i - 1].region == 3)
                    ok = ok && curve[i].profit > curve[i - 1].profit;
        }
        s.check("pricing.region3_profit_increasing", ok);
    }
    {  // optimal_price vs brute-force grid maximization
        detail::ReplicationRng rng(opt.seed, 32);
        bool ok = true;
        double worst = 0.0;
        const int points = 10000;
        const int n = std::max(20, opt.samples / 4);
        for (int i = 0; i < n; ++i) {
            const double k = detail::unif(rng, 0.1, 10.0);
            const double v = detail::unif(rng, 0.5, 200.0);
            const auto sol = optimal_price(v, k);
            const auto grid = reference::max_profit_on_grid(v, k, points);
            const double step = v / (points - 1);
            worst = std::max(worst, grid.profit - sol.pi_star);
            ok = ok && sol.pi_star >= grid.profit - 1e-4;
            if (sol.pricing_case != 1)
                ok = ok && std::abs(sol.p_star - grid.price) <= step + 1e-9;
        }
        s.check("pricing.grid_max_agreement", ok, worst);
    }
    {  // e^{W+k+1} solves ln(v)/(1 - 1/v) = k+1; constants chain; p4 placement
        double worst = 0.0;
        bool chain = true, p4ok = true;
        for (double k : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
            const auto pc = pricing_constants(k);
            const double vs = std::exp(pc.W + k + 1.0);
            worst = std::max(worst,
                             std::abs(buytiming::detail::log_ratio(vs) - (k + 1.0)));
            chain = chain && k + 1.0 < pc.v_m && pc.v_m <= pc.v_f && vs <= pc.v_f &&
                    pc.v_f >= k + pc.u;
            for (double extra : {0.0, 1.0, 10.0}) {
                const double v = k + pc.u + extra;
                const double p4 = v - k - buytiming::detail::log_ratio(v - k);
                p4ok = p4ok && p4 >= -1e-12 && p4 <= v - pc.u + 1e-9;
            }
        }
        s.check("pricing.threshold_consistency", worst <= 1e-9, worst);
        s.check_msg("pricing.constants_chain", chain, "k+1 < v_m <= v_f, e^{W+k+1} <= v_f, v_f >= k+u");
        s.check_msg("pricing.p4_in_region4", p4ok, "p4 in [0, v-u] whenever v >= k+u");
    }
    {  // single-period profit dominates, with equality exactly on cases 1-2
        detail::ReplicationRng rng(opt.seed, 33);
        bool ok = true;
        for (int i = 0; i < opt.samples; ++i) {
            const double k = detail::unif(rng, 0.1, 10.0);
            const double v = detail::unif(rng, 0.5, 200.0);
            const auto sol = optimal_price(v, k);
            const double sp = single_period_profit(v);
            if (sol.pricing_case <= 2)
                ok = ok && std::abs(sp - sol.pi_star) <= 1e-12;
            else
                ok = ok && sp > sol.pi_star;
        }
        s.check("pricing.single_period_dominance", ok);
    }
    return s.results;
}

inline std::vector<CheckResult> run_simulate_checks(const Options& opt) {
    detail::Suite s;

    {  // simulated utilities/profit track the closed forms within 3 SE
        detail::ReplicationRng rng(opt.seed, 41);
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const MarketParams mp{detail::unif(rng, 0.05, 0.8), detail::unif(rng, 0.0, 0.8),
                                  detail::unif(rng, 0.8, 2.0), detail::unif(rng, 0.0, 0.5),
                                  Demand::finite(detail::unif(rng, 0.3, 3.0))};
            const double q0 = detail::unif(rng, 0.05, 0.6);
            const MixedStrategy st{q0, detail::unif(rng, 0.05, 0.95 - q0)};
            const auto est = simulate_market(mp, st, SimConfig{opt.mc_replications, opt.seed + i});
            const ArrivalProfile ap{mp.demand.intensity * st.q0, mp.demand.intensity * st.q1};
            const auto util = expected_utilities(mp, ap);
            const double profit = firm_profit(mp.P, ap);
            const auto off = [&](const SimEstimate& e, double ref) {
                const double scale = std::max(e.std_error, 1e-12);
                return std::abs(e.mean - ref) / scale;
            };
            const double z = std::max({off(est.u0, util.u0), off(est.u1, util.u1),
                                       mp.P > 0.0 ? off(est.profit, profit) : 0.0});
            worst = std::max(worst, z);
            ok = ok && z <= 3.0;
        }
        s.check("simulate.matches_closed_forms", ok, worst);
    }
    {  // unbounded-demand equilibria admit no profitable deviation
        detail::ReplicationRng rng(opt.seed, 42);
        bool ok = true;
        double worst = -1e300;
        for (int region = 1; region <= 4; ++region) {
            for (int i = 0; i < 4; ++i) {
                const auto nm = detail::sample_in_region(region, rng);
                const auto ap = solve_rates(nm);
                const MarketParams mp{1.0, nm.k, nm.v, nm.p, Demand::unbounded()};
                const auto dev =
                    deviation_payoffs(ap, mp, SimConfig{opt.mc_replications, opt.seed + region});
                for (const auto& g : {dev.arrive0, dev.arrive1}) {
                    worst = std::max(worst, g.mean - 3.0 * g.std_error);
                    ok = ok && g.mean <= 3.0 * g.std_error;
                }
            }
        }
        s.check("simulate.no_profitable_deviation", ok, worst);
    }
    {  // fixed seeds reproduce bit-identical estimates
        const MarketParams mp{0.2, 0.4, 1.0, 0.1, Demand::finite(1.0)};
        const MixedStrategy st{0.3, 0.5};
        const SimConfig cfg{opt.mc_replications, opt.seed};
        const auto a = simulate_market(mp, st, cfg);
        const auto b = simulate_market(mp, st, cfg);
        const bool ok = a.u0.mean == b.u0.mean && a.u1.mean == b.u1.mean &&
                        a.profit.mean == b.profit.mean && a.welfare.mean == b.welfare.mean &&
                        a.welfare.std_error == b.welfare.std_error;
        s.check("simulate.deterministic_seeding", ok);
    }
    return s.results;
}

inline std::vector<CheckResult> run_all(const Options& opt = {}) {
    std::vector<CheckResult> all;
    for (auto&& batch :
         {run_lambert_checks(), run_market_checks(opt), run_finite_checks(opt),
          run_infinite_checks(opt), run_pricing_checks(opt), run_simulate_checks(opt)})
        all.insert(all.end(), batch.begin(), batch.end());
    return all;
}

}  // namespace buytiming::verify
