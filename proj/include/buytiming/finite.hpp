#pragma once

// Equilibria of the finite-demand game. With a Poisson(lambda) population and
// per-consumer arrival probabilities (q0, q1), seven support patterns can be
// consistent with equilibrium play:
//
//   1  q0 = q1 = 0          U0 <= 0, U1 <= 0
//   2  q0 = 0, 0 < q1 < 1   U1 = 0,  U0 <= 0
//   3  interior, q0+q1 < 1  U0 = U1 = 0
//   4  0 < q0 < 1, q1 = 0   U0 = 0,  U1 <= 0
//   5  interior, q0+q1 = 1  U0 = U1 >= 0
//   6  q0 = 1               U0 >= max(U1, 0)
//   7  q1 = 1               U1 >= max(U0, 0)
//
// There is at most one equilibrium of each type, so the solver handles the
// corner types directly and reduces types 2-5 to bracketed one-dimensional
// root finding on their monotone defining equations.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "buytiming/detail/math.hpp"
#include "buytiming/market.hpp"

namespace buytiming {

struct EquilibriumRecord {
    int type = 0;  // 1..7
    ArrivalProfile profile;
    Utilities utilities;
    double residual = 0.0;  // worst violation of the type's defining equalities
};

namespace detail {

inline constexpr double feas_tol = 1e-9;

// Solve expm1_ratio(x) = t on [0, hi]; the ratio decreases from 1, so the
// caller must ensure expm1_ratio(hi) <= t <= 1.
inline double invert_expm1_ratio(double t, double hi) {
    return bisect([t](double x) { return expm1_ratio(x) - t; }, 0.0, hi, 1e-13,
                  "invert_expm1_ratio");
}

// Indifference factor of the full-participation mix: with q0 + q1 = 1 and
// lambda = 1, U0 = U1 reduces to K = 1 - mix_factor(x).
inline double mix_factor(double x) {
    return std::exp(-x) * expm1_ratio(1.0 - x) / expm1_ratio(x);
}

}  // namespace detail

// Classifies a candidate profile: the unique type whose support pattern and
// utility conditions hold within tol, or nullopt. q-space and utility checks
// share the same tolerance.
inline std::optional<int> check_equilibrium(const MarketParams& mp, const ArrivalProfile& ap,
                                            double tol) {
    validate(mp);
    validate(ap);
    if (mp.demand.is_unbounded())
        throw std::invalid_argument("check_equilibrium: finite demand required");
    if (!(tol > 0.0)) throw std::invalid_argument("check_equilibrium: tol must be > 0");

    const double lambda = mp.demand.intensity;
    const double q0 = ap.lambda0 / lambda;
    const double q1 = ap.lambda1 / lambda;
    if (q0 + q1 > 1.0 + tol) return std::nullopt;

    const auto [u0, u1] = expected_utilities(mp, ap);
    const bool z0 = q0 <= tol, z1 = q1 <= tol;
    const bool one0 = q0 >= 1.0 - tol, one1 = q1 >= 1.0 - tol;

    if (z0 && z1) {
        if (u0 <= tol && u1 <= tol) return 1;
        return std::nullopt;
    }
    if (z0 && one1) {
        if (u1 >= std::max(u0, 0.0) - tol) return 7;
        return std::nullopt;
    }
    if (one0 && z1) {
        if (u0 >= std::max(u1, 0.0) - tol) return 6;
        return std::nullopt;
    }
    if (z0) {  // 0 < q1 < 1
        if (std::abs(u1) <= tol && u0 <= tol) return 2;
        return std::nullopt;
    }
    if (z1) {  // 0 < q0 < 1
        if (std::abs(u0) <= tol && u1 <= tol) return 4;
        return std::nullopt;
    }
    if (one0 || one1) return std::nullopt;  // both positive but one saturated
    if (q0 + q1 >= 1.0 - tol) {
        if (std::abs(u0 - u1) <= tol && u0 >= -tol) return 5;
        return std::nullopt;
    }
    if (std::abs(u0) <= tol && std::abs(u1) <= tol) return 3;
    return std::nullopt;
}

// All equilibria of the finite-demand game, at most one per type, sorted by
// type code.
inline std::vector<EquilibriumRecord> find_equilibria(const MarketParams& mp) {
    validate(mp);
    if (mp.demand.is_unbounded())
        throw std::invalid_argument("find_equilibria: finite demand required");

    const double lambda = mp.demand.intensity;
    const double c = mp.c;
    const double gain0 = mp.V - mp.K - mp.P;
    const double gain1 = mp.V - mp.P;
    const double tol = detail::feas_tol;

    const auto util0 = [&](double l0) { return -c + gain0 * detail::expm1_ratio(l0); };
    const auto util1 = [&](double l0, double l1) {
        return -c + std::exp(-l0) * gain1 * detail::expm1_ratio(l1);
    };

    std::vector<EquilibriumRecord> out;
    const auto push = [&](int type, double l0, double l1, double residual) {
        ArrivalProfile ap{l0, l1};
        out.push_back(EquilibriumRecord{type, ap, expected_utilities(mp, ap), residual});
    };

    // Type 1: nobody arrives.
    if (util0(0.0) <= tol && util1(0.0, 0.0) <= tol) push(1, 0.0, 0.0, 0.0);

    // Type 2: period-1 mixing only. U1(0, y) = 0 has an interior root iff
    // expm1_ratio(lambda) < c/gain1 < 1.
    if (gain1 > 0.0) {
        const double t = c / gain1;
        if (t < 1.0 && t > detail::expm1_ratio(lambda)) {
            const double y = detail::invert_expm1_ratio(t, lambda);
            if (util0(0.0) <= tol) push(2, 0.0, y, std::abs(util1(0.0, y)));
        }
    }

    // Types 3 and 4 share the U0(x) = 0 root.
    if (gain0 > 0.0) {
        const double t0 = c / gain0;
        if (t0 < 1.0 && t0 > detail::expm1_ratio(lambda)) {
            const double x = detail::invert_expm1_ratio(t0, lambda);
            if (gain1 > 0.0) {
                const double t1 = c * std::exp(x) / gain1;
                if (t1 < 1.0 && t1 > detail::expm1_ratio(lambda - x)) {
                    const double y = detail::invert_expm1_ratio(t1, lambda - x);
                    push(3, x, y, std::max(std::abs(util0(x)), std::abs(util1(x, y))));
                }
            }
            if (util1(x, 0.0) <= tol) push(4, x, 0.0, std::abs(util0(x)));
        }
    }

    // Type 5: full participation, q0 + q1 = 1. Scan U0(x) - U1(x, lambda - x)
    // for sign changes; the indifference equation is monotone, so at most one
    // admissible root exists.
    {
        const auto diff = [&](double x) { return util0(x) - util1(x, lambda - x); };
        const int n = 64;
        double prev_x = 0.0, prev_d = diff(0.0);
        for (int i = 1; i <= n; ++i) {
            const double x = lambda * i / n;
            const double d = diff(x);
            if ((prev_d <= 0.0) != (d <= 0.0) || d == 0.0) {
                const double root =
                    detail::bisect(diff, prev_x, x, 1e-13, "find_equilibria type 5");
                const double q0 = root / lambda;
                if (q0 > tol && q0 < 1.0 - tol && util0(root) >= -tol) {
                    push(5, root, lambda - root, std::abs(diff(root)));
                    break;
                }
            }
            prev_x = x;
            prev_d = d;
        }
    }

    // Type 6: everyone arrives early.
    if (util0(lambda) >= std::max(util1(lambda, 0.0), 0.0) - tol) push(6, lambda, 0.0, 0.0);

    // Type 7: everyone arrives at the ideal period.
    if (util1(0.0, lambda) >= std::max(util0(0.0), 0.0) - tol) push(7, 0.0, lambda, 0.0);

    std::sort(out.begin(), out.end(),
              [](const EquilibriumRecord& a, const EquilibriumRecord& b) { return a.type < b.type; });
    return out;
}

// Feasible equilibrium types at (c, K) under the V - P = 1, lambda = 1
// normalization. Points on a boundary report every adjacent type; weak
// inequalities carry a 1e-9 absolute tolerance.
inline std::set<int> classify_ck(double c, double K) {
    if (!(c > 0.0)) throw std::invalid_argument("classify_ck: c must be > 0");
    if (!(K >= 0.0)) throw std::invalid_argument("classify_ck: K must be >= 0");

    constexpr double tol = 1e-9;
    const double e = std::numbers::e;
    const double inv_e = 1.0 / e;
    const double rho1 = 1.0 - inv_e;                // expm1_ratio(1)
    const double k_corner = (e - 2.0) / (e - 1.0);  // K bound shared by types 5 and 6

    std::set<int> out;
    if (c >= 1.0 - tol && K >= 1.0 - c - tol) out.insert(1);
    if (c >= rho1 - tol && c <= 1.0 + tol && K >= 1.0 - c - tol) out.insert(2);
    if (K <= k_corner + tol && c <= (1.0 - K) * rho1 + tol) out.insert(6);
    if (K >= inv_e - tol && c <= rho1 + tol) out.insert(7);

    // Types 3 and 4 sit on the U0 = 0 curve: expm1_ratio(x) = c/(1-K).
    if (K < 1.0) {
        const double ratio = c / (1.0 - K);
        if (ratio >= rho1 - tol && ratio <= 1.0 + tol) {
            const double x =
                detail::invert_expm1_ratio(std::clamp(ratio, rho1, 1.0), 1.0);
            const double t1 = c * std::exp(x);
            if (t1 >= detail::expm1_ratio(1.0 - x) - tol && t1 <= 1.0 + tol) out.insert(3);
            if (c >= std::exp(-x) - tol) out.insert(4);
        }
    }

    // Type 5: K = 1 - mix_factor(x) runs from 1/e at x = 0 up to k_corner.
    if (K >= inv_e - tol && K <= k_corner + tol) {
        const double target = std::clamp(K, inv_e, k_corner);
        const double x = detail::bisect(
            [target](double x) { return 1.0 - detail::mix_factor(x) - target; }, 0.0, 1.0,
            1e-13, "classify_ck type 5");
        if (c <= std::exp(-x) * detail::expm1_ratio(1.0 - x) + tol) out.insert(5);
    }
    return out;
}

// Feasible types at (V, K) under the c = 1, lambda = 1 normalization, where V
// denotes the net value V - P. Same boundary conventions as classify_ck.
inline std::set<int> classify_vk(double V, double K) {
    if (!(K >= 0.0)) throw std::invalid_argument("classify_vk: K must be >= 0");
    if (!std::isfinite(V)) throw std::invalid_argument("classify_vk: V must be finite");

    constexpr double tol = 1e-9;
    const double e = std::numbers::e;
    const double rho1 = 1.0 - 1.0 / e;
    const double v_corner = e / (e - 1.0);  // 1/expm1_ratio(1)

    std::set<int> out;
    if (V <= 1.0 + tol && V - K <= 1.0 + tol) out.insert(1);
    if (V >= 1.0 - tol && V <= v_corner + tol && V - K <= 1.0 + tol) out.insert(2);
    if (V >= (e - 1.0) / (e - 2.0) * K - tol && V >= K + v_corner - tol) out.insert(6);
    if (K >= V / e - tol && V >= v_corner - tol) out.insert(7);

    if (V - K > 0.0) {
        const double ratio = 1.0 / (V - K);  // U0 = 0: expm1_ratio(x) = 1/(V-K)
        if (ratio >= rho1 - tol && ratio <= 1.0 + tol) {
            const double x =
                detail::invert_expm1_ratio(std::clamp(ratio, rho1, 1.0), 1.0);
            const double t1 = std::exp(x) / V;
            if (t1 >= detail::expm1_ratio(1.0 - x) - tol && t1 <= 1.0 + tol) out.insert(3);
            if (V <= std::exp(x) + tol) out.insert(4);
        }
    }

    if (V > 0.0) {
        const double r = K / V;  // type 5: K/V = 1 - mix_factor(x)
        const double k_corner = (e - 2.0) / (e - 1.0);
        if (r >= 1.0 / e - tol && r <= k_corner + tol) {
            const double target = std::clamp(r, 1.0 / e, k_corner);
            const double x = detail::bisect(
                [target](double x) { return 1.0 - detail::mix_factor(x) - target; }, 0.0, 1.0,
                1e-13, "classify_vk type 5");
            if (V >= std::exp(x) / detail::expm1_ratio(1.0 - x) - tol) out.insert(5);
        }
    }
    return out;
}

}  // namespace buytiming
