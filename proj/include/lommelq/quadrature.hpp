#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <limits>
#include <numbers>

#include "lommelq/branch.hpp"
#include "lommelq/errors.hpp"

namespace lommelq {

// 16-point Gauss-Legendre rule on [-1, 1], built once by Newton iteration.
struct GaussLegendre16 {
    std::array<double, 16> x{};
    std::array<double, 16> w{};

    GaussLegendre16() {
        constexpr int n = 16;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }

    static const GaussLegendre16& get() {
        static const GaussLegendre16 rule;
        return rule;
    }

    template <class F>
    Complex apply(F&& f, double a, double b) const {
        double h = 0.5 * (b - a), c = 0.5 * (a + b);
        Complex s = 0.0;
        for (int i = 0; i < 16; ++i) s += w[i] * f(c + h * x[i]);
        return s * h;
    }

    // Also returns the rule applied to |f|, a scale for roundoff.
    template <class F>
    std::pair<Complex, double> apply_with_abs(F&& f, double a, double b) const {
        double h = 0.5 * (b - a), c = 0.5 * (a + b);
        Complex s = 0.0;
        double m = 0.0;
        for (int i = 0; i < 16; ++i) {
            Complex v = f(c + h * x[i]);
            s += w[i] * v;
            m += w[i] * std::abs(v);
        }
        return {s * h, m * std::abs(h)};
    }
};

// Adaptive bisection driven by GL16 on each half against GL16 on the whole.
// Intervals whose estimate is within rel_floor of the integral of |f| are
// accepted, since the integrand cannot be resolved below its own noise.
struct AdaptiveResult {
    Complex value;
    double err = 0.0;
    long evaluations = 0;
};

template <class F>
AdaptiveResult integrate_adaptive(F&& f, double a, double b, double tol, long max_evals = 1L << 20,
                                  double rel_floor = 1e4 * std::numeric_limits<double>::epsilon()) {
    const auto& gl = GaussLegendre16::get();
    AdaptiveResult out;
    std::function<void(double, double, Complex, double, int)> rec = [&](double lo, double hi, Complex whole, double t,
                                                                        int depth) {
        double mid = 0.5 * (lo + hi);
        auto [left, left_abs] = gl.apply_with_abs(f, lo, mid);
        auto [right, right_abs] = gl.apply_with_abs(f, mid, hi);
        out.evaluations += 32;
        double diff = std::abs(left + right - whole);
        double floor = rel_floor * (left_abs + right_abs);
        if (diff <= t || diff <= floor || depth >= 50) {
            out.value += left + right;
            out.err += diff;
            return;
        }
        if (out.evaluations > max_evals) throw QuadratureError("adaptive quadrature exceeded its sample budget");
        rec(lo, mid, left, 0.5 * t, depth + 1);
        rec(mid, hi, right, 0.5 * t, depth + 1);
    };
    Complex whole = gl.apply(f, a, b);
    out.evaluations += 16;
    rec(a, b, whole, tol, 0);
    return out;
}

} // namespace lommelq
