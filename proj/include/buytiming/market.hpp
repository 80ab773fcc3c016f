#pragma once

// Parameter spaces, expected utilities, firm profit and social welfare for
// the two-period buy-timing market.
//
// Raw parameters: search cost c, early-purchase penalty K, value V at the
// ideal period (period 1), price P, and a Poisson demand intensity that may
// be unbounded. NormalizedMarket measures everything in units of c:
// v = V/c, k = K/c, p = P/c; welfare and profit in that form are also in
// units of c.

#include <cmath>
#include <limits>
#include <stdexcept>

#include "buytiming/detail/math.hpp"

namespace buytiming {

// Poisson intensity of the consumer population; +inf marks unbounded demand.
struct Demand {
    double intensity = 1.0;

    static Demand finite(double lambda) {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("Demand::finite: lambda must be positive and finite");
        return Demand{lambda};
    }
    static Demand unbounded() { return Demand{std::numeric_limits<double>::infinity()}; }
    bool is_unbounded() const { return std::isinf(intensity); }
};

struct MarketParams {
    double c = 1.0;   // search cost, paid on every store visit
    double K = 0.0;   // utility lost by buying in period 0
    double V = 1.0;   // value of the good at the ideal period
    double P = 0.0;   // price, identical in both periods
    Demand demand{};
};

inline void validate(const MarketParams& mp) {
    if (!(mp.c > 0.0)) throw std::invalid_argument("MarketParams: c must be > 0");
    if (!(mp.K >= 0.0)) throw std::invalid_argument("MarketParams: K must be >= 0");
    if (!(mp.P >= 0.0)) throw std::invalid_argument("MarketParams: P must be >= 0");
    if (!std::isfinite(mp.V)) throw std::invalid_argument("MarketParams: V must be finite");
    if (!mp.demand.is_unbounded() && !(mp.demand.intensity > 0.0))
        throw std::invalid_argument("MarketParams: finite demand intensity must be > 0");
}

// Parameters in units of the search cost. v1 = v - p is the net benefit of a
// period-1 purchase, v0 = v - p - k the net benefit of buying early.
struct NormalizedMarket {
    double v = 1.0;
    double k = 0.0;
    double p = 0.0;

    double v0() const { return v - p - k; }
    double v1() const { return v - p; }
};

inline void validate(const NormalizedMarket& nm) {
    if (!(nm.k >= 0.0)) throw std::invalid_argument("NormalizedMarket: k must be >= 0");
    if (!(nm.p >= 0.0)) throw std::invalid_argument("NormalizedMarket: p must be >= 0");
    if (!std::isfinite(nm.v)) throw std::invalid_argument("NormalizedMarket: v must be finite");
}

inline NormalizedMarket normalize(const MarketParams& mp) {
    validate(mp);
    return NormalizedMarket{mp.V / mp.c, mp.K / mp.c, mp.P / mp.c};
}

// Poisson arrival intensities of the two periods.
struct ArrivalProfile {
    double lambda0 = 0.0;
    double lambda1 = 0.0;

    double total() const { return lambda0 + lambda1; }
};

inline void validate(const ArrivalProfile& ap) {
    if (!(ap.lambda0 >= 0.0) || !std::isfinite(ap.lambda0) ||
        !(ap.lambda1 >= 0.0) || !std::isfinite(ap.lambda1))
        throw std::invalid_argument("ArrivalProfile: rates must be finite and >= 0");
}

struct Utilities {
    double u0 = 0.0;
    double u1 = 0.0;
};

// Per-consumer arrival probabilities; mass 1 - q0 - q1 stays out.
struct MixedStrategy {
    double q0 = 0.0;
    double q1 = 0.0;
};

inline void validate(const MixedStrategy& st) {
    if (!(st.q0 >= 0.0 && st.q0 <= 1.0) || !(st.q1 >= 0.0 && st.q1 <= 1.0) ||
        !(st.q0 + st.q1 <= 1.0 + 1e-12))
        throw std::invalid_argument("MixedStrategy: probabilities must lie in the simplex");
}

// Expected utility of arriving in period 0 resp. period 1, given that rival
// arrivals are Poisson with the profile's intensities:
//   u0 = -c + (V-K-P) * (1-e^{-l0})/l0
//   u1 = -c + e^{-l0} * (V-P) * (1-e^{-l1})/l1
// The e^{-l0} factor is the probability the good survives period 0.
inline Utilities expected_utilities(const MarketParams& mp, const ArrivalProfile& ap) {
    validate(mp);
    validate(ap);
    const double gain0 = mp.V - mp.K - mp.P;
    const double gain1 = mp.V - mp.P;
    return Utilities{
        -mp.c + gain0 * detail::expm1_ratio(ap.lambda0),
        -mp.c + std::exp(-ap.lambda0) * gain1 * detail::expm1_ratio(ap.lambda1)};
}

// price * P(at least one arrival); the single unit sells iff anyone shows up.
inline double firm_profit(double price, const ArrivalProfile& ap) {
    if (!(price >= 0.0)) throw std::invalid_argument("firm_profit: price must be >= 0");
    validate(ap);
    return price * -std::expm1(-ap.total());
}

// Aggregate consumer surplus net of search costs, in units of c:
//   (1-e^{-l0})(v-p-k) + e^{-l0}(1-e^{-l1})(v-p) - (l0+l1)
// Multiply by c for raw-unit welfare.
inline double social_welfare_two_period(const NormalizedMarket& nm, const ArrivalProfile& ap) {
    validate(nm);
    validate(ap);
    const double win0 = -std::expm1(-ap.lambda0);
    const double win1 = -std::expm1(-ap.lambda1);
    return win0 * nm.v0() + std::exp(-ap.lambda0) * win1 * nm.v1() - ap.total();
}

// Welfare when the store opens only in period 1: (v-p)(1-e^{-l1}) - l1.
inline double social_welfare_single_period(const NormalizedMarket& nm, double lambda1) {
    validate(nm);
    if (!(lambda1 >= 0.0)) throw std::invalid_argument("social_welfare_single_period: lambda1 must be >= 0");
    return nm.v1() * -std::expm1(-lambda1) - lambda1;
}

}  // namespace buytiming
