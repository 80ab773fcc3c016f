#pragma once

// Test-side oracles. Deliberately independent of the library's solution
// paths: plain bisection and finite differences only.

#include <cmath>

namespace oracles {

// Root of w*e^w = a on the w >= -1 branch.
inline double lambert_bisect(double a) {
    const auto f = [a](double w) { return w * std::exp(w) - a; };
    double lo = -1.0;
    double hi = a < 0.0 ? 0.0 : 1.0;
    while (f(hi) < 0.0) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

template <typename F>
inline double central_diff(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles
