#pragma once

// Equilibrium arrival rates under unbounded potential demand. The net value
// v - p sorts the market into four regimes:
//
//   Region 1:  0 <= v-p < 1          nobody arrives
//   Region 2:  1 <= v-p <= k+1       period-1 arrivals only, U1 = 0
//   Region 3:  k+1 < v-p < u(k)      both periods active, U0 = U1 = 0
//   Region 4:  v-p >= u(k)           period-0 arrivals only, U0 = 0
//
// u(k) is the unique root of k = u - ln(u)/(1 - 1/u); exact boundary points
// resolve to the lower-numbered closed region. The two defining equations are
//
//   (E1)  v-p-k = l0 / (1 - e^{-l0})        (U0 = 0, Regions 3 and 4)
//   (E2)  v-p   = l1 e^{l0} / (1 - e^{-l1}) (U1 = 0, Regions 2 and 3)
//
// and the closed forms below solve them through the Lambert function.

#include <cmath>
#include <stdexcept>

#include "buytiming/detail/math.hpp"
#include "buytiming/lambert.hpp"
#include "buytiming/market.hpp"

namespace buytiming {

// Border value of v - p between Regions 3 and 4: the unique u >= 1 with
// k = u - ln(u)/(1 - 1/u). The right-hand side increases strictly from 0,
// so bisection on a fixed bracket suffices.
inline double u_of_k(double k) {
    if (!(k >= 0.0)) throw std::domain_error("u_of_k: requires k >= 0");
    if (k == 0.0) return 1.0;
    const double hi = k + 4.0 + std::log(k + 2.0);
    return detail::bisect(
        [k](double u) { return u - detail::log_ratio(u) - k; },
        1.0 + 1e-12, hi, 1e-12, "u_of_k");
}

inline int classify_region(const NormalizedMarket& nm, double u) {
    validate(nm);
    const double net = nm.v1();
    if (!(net >= 0.0)) throw std::domain_error("classify_region: requires v - p >= 0");
    if (net < 1.0) return 1;
    if (net <= nm.k + 1.0) return 2;
    if (net < u) return 3;
    return 4;
}

inline int classify_region(const NormalizedMarket& nm) {
    return classify_region(nm, u_of_k(nm.k));
}

// l0 = v0 + R(v0) solves (E1). Needs v0 >= 1; smaller values would produce a
// negative rate. At v0 = 1 this is exactly 0.
inline double lambda0_closed_form(double v0) {
    if (!(v0 >= 1.0)) throw std::domain_error("lambda0_closed_form: requires v0 >= 1");
    return v0 + r_func(v0);
}

// Region-2 rate: l1 = v1 + R(v1) solves (E2) with l0 = 0.
inline double lambda1_region2(double v1) {
    if (!(v1 >= 1.0)) throw std::domain_error("lambda1_region2: requires v1 >= 1");
    return v1 + r_func(v1);
}

namespace detail {
// W[A(v0)] - v1*R(v0)/v0, the Region-3 period-1 rate. A(v0) stays within
// (-1/e, 0) on the open region and hits -1/e at the 3/4 border, where the
// branch-point clamp keeps round-off out of the domain check.
inline double lambda1_region3_impl(double v0, double v1, double k) {
    const double r = r_func(v0);
    return lambert_w0(a_func(v0, k)) - v1 * r / v0;
}
}  // namespace detail

inline double lambda1_region3(const NormalizedMarket& nm, double u) {
    if (classify_region(nm, u) != 3)
        throw std::domain_error("lambda1_region3: parameters outside Region 3");
    return detail::lambda1_region3_impl(nm.v0(), nm.v1(), nm.k);
}

inline double lambda1_region3(const NormalizedMarket& nm) {
    return lambda1_region3(nm, u_of_k(nm.k));
}

// Equilibrium arrival profile for the region the parameters fall in.
inline ArrivalProfile solve_rates(const NormalizedMarket& nm, double u) {
    switch (classify_region(nm, u)) {
        case 1: return ArrivalProfile{0.0, 0.0};
        case 2: return ArrivalProfile{0.0, lambda1_region2(nm.v1())};
        case 3:
            return ArrivalProfile{lambda0_closed_form(nm.v0()),
                                  detail::lambda1_region3_impl(nm.v0(), nm.v1(), nm.k)};
        default: return ArrivalProfile{lambda0_closed_form(nm.v0()), 0.0};
    }
}

inline ArrivalProfile solve_rates(const NormalizedMarket& nm) {
    return solve_rates(nm, u_of_k(nm.k));
}

}  // namespace buytiming
