#pragma once

// Principal-branch Lambert W (the inverse of w*e^w restricted to W >= -1) and
// the two derived functions the arrival-rate closed forms are built from:
//
//   r_func(a) = W[-a*e^{-a}]
//   a_func(a, k) = -(a+k) * e^{-a + k*r_func(a)/a}
//
// Everything is real-valued; arguments below -1/e are rejected apart from a
// small clamp window that absorbs round-off in expressions of the form
// -(x)e^{-x} evaluated near x = 1.

#include <cmath>
#include <stdexcept>

#include "buytiming/errors.hpp"

namespace buytiming {

struct LambertConfig {
    double abs_tol = 1e-12;
    int max_iter = 64;
};

// Domain edge of the W >= -1 branch.
inline double lambert_branch_point() { return -std::exp(-1.0); }

// Arguments in [-1/e - branch_eps, -1/e] are treated as exactly -1/e.
inline constexpr double lambert_branch_eps = 1e-12;

// W[a] for a >= -1/e, with W[a] >= -1. Halley iterations from a piecewise
// seed: a square-root series at the branch point, a short power series near
// zero, and log-based asymptotics for large arguments.
inline double lambert_w0(double a, const LambertConfig& cfg = {}) {
    if (std::isnan(a)) throw std::domain_error("lambert_w0: NaN argument");
    const double bp = lambert_branch_point();
    if (a < bp - lambert_branch_eps)
        throw std::domain_error("lambert_w0: argument below -1/e");
    if (a <= bp) return -1.0;
    if (a == 0.0) return 0.0;

    double w;
    if (a < -0.3) {
        const double p = std::sqrt(2.0 * (std::exp(1.0) * a + 1.0));
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
    } else if (a < 0.5) {
        w = a * (1.0 + a * (-1.0 + a * 1.5));
    } else if (a < 6.0) {
        w = std::log1p(a);
    } else {
        const double l1 = std::log(a);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    for (int i = 0; i < cfg.max_iter; ++i) {
        if (w + 1.0 < 1e-12) break;  // seed already at branch-point accuracy
        const double ew = std::exp(w);
        const double f = w * ew - a;
        const double wp1 = w + 1.0;
        const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        const double dw = f / denom;
        w -= dw;
        if (w < -1.0) w = -1.0;
        if (std::abs(dw) <= 1e-15 * std::max(1.0, std::abs(w))) break;
    }

    if (std::abs(w * std::exp(w) - a) > cfg.abs_tol * std::max(1.0, std::abs(a)))
        throw convergence_error("lambert_w0: residual above tolerance");
    return w;
}

// W'[a] = W[a] / (a*(W[a]+1)); the removable singularity at a = 0 evaluates
// to 1, the pole at a = -1/e is rejected.
inline double lambert_w0_derivative(double a, const LambertConfig& cfg = {}) {
    const double bp = lambert_branch_point();
    if (a < bp - lambert_branch_eps)
        throw std::domain_error("lambert_w0_derivative: argument below -1/e");
    if (a <= bp + lambert_branch_eps)
        throw std::domain_error("lambert_w0_derivative: unbounded at -1/e");
    if (a == 0.0) return 1.0;
    const double w = lambert_w0(a, cfg);
    return w / (a * (w + 1.0));
}

// R(a) = W[-a*e^{-a}]. For a <= 1 the identity W[x e^x] = x gives R(a) = -a
// exactly, which also sidesteps cancellation against the branch point.
inline double r_func(double a) {
    if (a <= 1.0) return -a;
    return lambert_w0(-a * std::exp(-a));
}

// A(a) = -(a+k) * e^{-a + k*R(a)/a}, defined for a > 0, k >= 0.
inline double a_func(double a, double k) {
    if (!(a > 0.0)) throw std::domain_error("a_func: requires a > 0");
    if (!(k >= 0.0)) throw std::domain_error("a_func: requires k >= 0");
    return -(a + k) * std::exp(-a + k * r_func(a) / a);
}

}  // namespace buytiming
