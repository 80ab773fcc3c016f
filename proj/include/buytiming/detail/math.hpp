#pragma once

#include <cmath>
#include <string>

#include "buytiming/errors.hpp"

namespace buytiming::detail {

// (1 - e^{-x}) / x, continuously extended by 1 at x = 0.
// Equals E[1/(N+1)] for N ~ Poisson(x), the chance a tagged arrival wins a
// uniform draw against Poisson-many rivals. Below 1e-6 the direct quotient
// loses digits, so a 3-term expansion takes over.
inline double expm1_ratio(double x) {
    if (x < 1e-6) return 1.0 - x / 2.0 + x * x / 6.0;
    return -std::expm1(-x) / x;
}

// ln(y) / (1 - 1/y) for y > 0, continuously extended by 1 at y = 1.
inline double log_ratio(double y) {
    const double t = y - 1.0;
    if (t == 0.0) return 1.0;
    return std::log1p(t) * (1.0 + t) / t;
}

// Bisection for a root of f bracketed by [lo, hi]. f must change sign (or
// vanish) on the bracket; the interval is shrunk to width xtol.
template <typename F>
inline double bisect(F&& f, double lo, double hi, double xtol, const char* what,
                     int max_iter = 200) {
    double flo = f(lo);
    if (flo == 0.0) return lo;
    double fhi = f(hi);
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw convergence_error(std::string(what) + ": root not bracketed");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= xtol || mid == lo || mid == hi) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    throw convergence_error(std::string(what) + ": bisection iteration budget exhausted");
}

}  // namespace buytiming::detail
