#pragma once

// Profit maximization over the posted price p for normalized parameters
// (v, k) with unbounded demand. Raising p walks the market leftward through
// Regions 4 -> 3 -> 2 -> 1 of the net value v - p; the candidate optima are
//
//   p2 = v - ln(v)/(1 - 1/v)          interior maximum of the Region-2 branch
//   p3 = v - k - 1                    right end of Region 3 (profit increases
//                                     in p throughout Region 3)
//   p4 = v - k - ln(v-k)/(1-1/(v-k))  interior maximum of the Region-4 branch
//
// and the optimal policy has four cases split by v against e^{W+k+1} and
// v_f, with W = W[-(k+1)e^{-(k+1)}] and v_f the larger root of
// f(v) = (1 - v/(k+1))*W - ln(v-k).

#include <cmath>
#include <stdexcept>
#include <vector>

#include "buytiming/detail/math.hpp"
#include "buytiming/infinite.hpp"
#include "buytiming/lambert.hpp"
#include "buytiming/market.hpp"

namespace buytiming {

// W[-(k+1)e^{-(k+1)}], in [-1, 0); equals -1 exactly at k = 0.
inline double w_const(double k) {
    if (!(k >= 0.0)) throw std::domain_error("w_const: requires k >= 0");
    const double a = k + 1.0;
    return lambert_w0(-a * std::exp(-a));
}

// f(v) = (1 - v/(k+1))*W - ln(v-k), the profit gap pi4 - pi3. Strictly
// convex in v with roots k+1 and v_f.
inline double f_func(double v, double k) {
    if (!(k >= 0.0)) throw std::domain_error("f_func: requires k >= 0");
    if (!(v > k)) throw std::domain_error("f_func: requires v > k");
    return (1.0 - v / (k + 1.0)) * w_const(k) - std::log(v - k);
}

// The root of f above v_m = k - (k+1)/W. f(v_m) < 0 is guaranteed, so the
// upper bracket doubles until f turns positive, capped at 1e6.
inline double v_f_of_k(double k) {
    if (!(k > 0.0)) throw std::domain_error("v_f_of_k: requires k > 0");
    const double W = w_const(k);
    const double v_m = k - (k + 1.0) / W;
    double hi = v_m;
    double f_hi;
    do {
        hi *= 2.0;
        if (hi > 1e6) throw convergence_error("v_f_of_k: no sign change below 1e6");
        f_hi = (1.0 - hi / (k + 1.0)) * W - std::log(hi - k);
    } while (f_hi <= 0.0);
    return detail::bisect(
        [&](double v) { return (1.0 - v / (k + 1.0)) * W - std::log(v - k); }, v_m, hi,
        1e-10 * hi, "v_f_of_k");
}

// The recurring constants of the pricing policy for a given k > 0.
struct PricingConstants {
    double k = 0.0;
    double W = 0.0;    // W[-(k+1)e^{-(k+1)}]
    double u = 0.0;    // Region 3/4 border of v - p
    double v_f = 0.0;  // case 3/4 switch point
    double v_m = 0.0;  // minimum of f, between the roots k+1 and v_f
};

inline PricingConstants pricing_constants(double k) {
    if (!(k > 0.0)) throw std::domain_error("pricing_constants: requires k > 0");
    const double W = w_const(k);
    return PricingConstants{k, W, u_of_k(k), v_f_of_k(k), k - (k + 1.0) / W};
}

struct PriceCandidate {
    int region = 0;  // 2, 3 or 4
    double price = 0.0;
    double profit = 0.0;
};

// Candidate optimal prices that actually fall inside their region:
// p2 whenever v <= e^{W+k+1}, p3 whenever Region 3 is nonempty (v >= k+1),
// p4 whenever v >= k + u.
inline std::vector<PriceCandidate> candidate_prices(double v, double k) {
    if (!(v >= 1.0)) throw std::domain_error("candidate_prices: requires v >= 1");
    if (!(k >= 0.0)) throw std::domain_error("candidate_prices: requires k >= 0");
    const double W = w_const(k);
    std::vector<PriceCandidate> out;
    if (v <= std::exp(W + k + 1.0))
        out.push_back({2, v - detail::log_ratio(v), v - 1.0 - std::log(v)});
    if (v >= k + 1.0)
        out.push_back({3, v - k - 1.0, (v - k - 1.0) * -std::expm1(-(W + k + 1.0))});
    if (v >= k + u_of_k(k)) {
        const double vk = v - k;
        out.push_back({4, vk - detail::log_ratio(vk), vk - 1.0 - std::log(vk)});
    }
    return out;
}

struct PricingSolution {
    int pricing_case = 0;  // 1..4
    double p_star = 0.0;
    double pi_star = 0.0;
    ArrivalProfile profile;
};

// The profit-maximizing price. Boundary ties resolve to the lower-numbered
// case. Case 1 has no sale at any price; p_star is reported as v by
// convention. k = 0 collapses Region 3 (W = -1), leaving p2 and p4 to
// compare directly; they coincide, and the induced arrivals land in
// Region 4.
inline PricingSolution optimal_price(double v, double k) {
    if (!(v >= 0.0)) throw std::domain_error("optimal_price: requires v >= 0");
    if (!(k >= 0.0)) throw std::domain_error("optimal_price: requires k >= 0");
    if (v < 1.0) return PricingSolution{1, v, 0.0, {0.0, 0.0}};

    if (k == 0.0) {
        if (v == 1.0) return PricingSolution{2, 0.0, 0.0, {0.0, 0.0}};
        return PricingSolution{4, v - detail::log_ratio(v), v - 1.0 - std::log(v),
                               {std::log(v), 0.0}};
    }

    const double W = w_const(k);
    if (v <= std::exp(W + k + 1.0))
        return PricingSolution{2, v - detail::log_ratio(v), v - 1.0 - std::log(v),
                               {0.0, std::log(v)}};
    if (v <= v_f_of_k(k)) {
        const double l1 = W + k + 1.0;
        return PricingSolution{3, v - k - 1.0, (v - k - 1.0) * -std::expm1(-l1), {0.0, l1}};
    }
    const double vk = v - k;
    return PricingSolution{4, vk - detail::log_ratio(vk), vk - 1.0 - std::log(vk),
                           {std::log(vk), 0.0}};
}

struct ProfitPoint {
    double price = 0.0;
    int region = 0;
    double profit = 0.0;
};

// Equilibrium profit p * (1 - e^{-(l0+l1)}) on a uniform price grid over
// [0, v], with the region label of each point. Region labels follow the
// net-value boundary conventions of classify_region.
inline std::vector<ProfitPoint> profit_curve(double v, double k, int num_points) {
    if (!(v >= 0.0) || !(k >= 0.0)) throw std::domain_error("profit_curve: requires v, k >= 0");
    if (num_points < 2) throw std::invalid_argument("profit_curve: num_points must be >= 2");
    const double u = u_of_k(k);
    std::vector<ProfitPoint> out;
    out.reserve(static_cast<std::size_t>(num_points));
    for (int i = 0; i < num_points; ++i) {
        const double p = v * (static_cast<double>(i) / (num_points - 1));  // hits v exactly at the end
        const NormalizedMarket nm{v, k, p};
        const ArrivalProfile ap = solve_rates(nm, u);
        out.push_back({p, classify_region(nm, u), firm_profit(p, ap)});
    }
    return out;
}

// Optimal profit when the good is offered in period 1 only (k effectively
// infinite): 0 below v = 1, else v - 1 - ln(v).
inline double single_period_profit(double v) {
    if (!(v >= 0.0)) throw std::domain_error("single_period_profit: requires v >= 0");
    if (v < 1.0) return 0.0;
    return v - 1.0 - std::log(v);
}

}  // namespace buytiming
