#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace lommelq {

using Complex = std::complex<double>;

// A point on the logarithmic Riemann surface. The argument is never reduced,
// so powers and logarithms remember which sheet they live on.
struct BranchPoint {
    double modulus = 1.0;
    double arg = 0.0;

    BranchPoint() = default;
    BranchPoint(double r, double theta) : modulus(r), arg(theta) {}

    static BranchPoint principal(Complex z) { return {std::abs(z), std::arg(z)}; }

    Complex value() const { return std::polar(modulus, arg); }
    Complex log() const { return {std::log(modulus), arg}; }
    Complex pow(Complex a) const { return std::exp(a * log()); }

    bool is_principal() const { return arg > -std::numbers::pi && arg <= std::numbers::pi; }

    // Same point turned by an angle, staying on the continued sheet.
    BranchPoint rotated(double dtheta) const { return {modulus, arg + dtheta}; }
    BranchPoint scaled(double s) const { return {modulus * s, arg}; }
};

// arg = theta_p - m*pi with theta_p in (-pi, pi] and m even.
struct BranchSplit {
    BranchPoint principal;
    int m = 0;
};

inline BranchSplit split_branch(const BranchPoint& z) {
    constexpr double pi = std::numbers::pi;
    double turns = std::floor((pi - z.arg) / (2.0 * pi));
    double theta = z.arg + 2.0 * pi * turns;
    if (theta <= -pi) {
        theta += 2.0 * pi;
        turns += 1.0;
    }
    return {{z.modulus, theta}, static_cast<int>(2.0 * turns)};
}

} // namespace lommelq
