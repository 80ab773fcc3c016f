#pragma once

// Cross-check solvers that attack the defining equations directly, without
// the Lambert-function closed forms. The rate solvers below know nothing of
// r_func / a_func; they bisect the raw fixed-point equations
//
//   v0 = l0 / (1 - e^{-l0})   and   v1 = l1 e^{l0} / (1 - e^{-l1})
//
// so agreement with solve_rates validates the closed forms end to end. The
// grid maximizer brute-forces the profit curve to validate the optimal-price
// policy.

#include <cmath>

#include "buytiming/detail/math.hpp"
#include "buytiming/infinite.hpp"
#include "buytiming/market.hpp"

namespace buytiming::reference {

// Root of l / (1 - e^{-l}) = v0 for v0 >= 1; the left side increases from 1.
inline double arrival_rate_from_e1(double v0) {
    if (!(v0 >= 1.0)) throw std::domain_error("arrival_rate_from_e1: requires v0 >= 1");
    const auto f = [v0](double l) { return l / -std::expm1(-l) - v0; };
    if (v0 == 1.0) return 0.0;
    return detail::bisect(f, 1e-14, v0 + 5.0, 1e-13, "arrival_rate_from_e1");
}

// Root of l e^{l0} / (1 - e^{-l}) = v1 given l0.
inline double arrival_rate_from_e2(double v1, double lambda0) {
    const double target = v1 * std::exp(-lambda0);
    if (!(target >= 1.0)) throw std::domain_error("arrival_rate_from_e2: no nonnegative root");
    if (target == 1.0) return 0.0;
    const auto f = [target](double l) { return l / -std::expm1(-l) - target; };
    return detail::bisect(f, 1e-14, target + 5.0, 1e-13, "arrival_rate_from_e2");
}

// Damped alternating substitution on the two equations, relaxation 0.5.
// Regions with a single active period reduce to one bisection; Region 3
// alternates until both rates settle.
inline ArrivalProfile solve_rates_damped(const NormalizedMarket& nm, double relax = 0.5) {
    validate(nm);
    const int region = classify_region(nm);
    switch (region) {
        case 1: return ArrivalProfile{0.0, 0.0};
        case 2: return ArrivalProfile{0.0, arrival_rate_from_e2(nm.v1(), 0.0)};
        case 4: return ArrivalProfile{arrival_rate_from_e1(nm.v0()), 0.0};
        default: break;
    }
    // Starting at zero keeps every iterate below the E1 root, so the E2
    // target v1*e^{-l0} never dips under its lower limit of 1.
    double l0 = 0.0, l1 = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double next0 = (1.0 - relax) * l0 + relax * arrival_rate_from_e1(nm.v0());
        const double next1 = (1.0 - relax) * l1 + relax * arrival_rate_from_e2(nm.v1(), next0);
        const double step = std::max(std::abs(next0 - l0), std::abs(next1 - l1));
        l0 = next0;
        l1 = next1;
        if (step <= 1e-13) return ArrivalProfile{l0, l1};
    }
    throw convergence_error("solve_rates_damped: alternation did not settle");
}

struct GridMax {
    double price = 0.0;
    double profit = 0.0;
};

// Brute-force maximum of p * (1 - e^{-(l0+l1)}) over a uniform price grid on
// [0, v]. Rates come from the region dispatch in solve_rates; the pricing
// policy's case analysis is not consulted.
inline GridMax max_profit_on_grid(double v, double k, int points) {
    const double u = u_of_k(k);
    GridMax best;
    for (int i = 0; i < points; ++i) {
        const double p = v * (static_cast<double>(i) / (points - 1));  // hits v exactly at the end
        const NormalizedMarket nm{v, k, p};
        const double pi = firm_profit(p, solve_rates(nm, u));
        if (pi > best.profit) best = GridMax{p, pi};
    }
    return best;
}

}  // namespace buytiming::reference
