#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lommelq/branch.hpp"

namespace lommelq {

using Rational = boost::multiprecision::cpp_rational;

// Dense polynomial with complex coefficients; coeffs[k] multiplies x^k.
struct Poly {
    std::vector<Complex> coeffs;

    Poly() = default;
    explicit Poly(std::vector<Complex> c) : coeffs(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    Complex operator()(Complex x) const;
    Poly derivative() const;
    void trim();
};

// Polynomial with exact rational coefficients.
struct RationalPoly {
    std::vector<Rational> coeffs;

    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    void trim();

    RationalPoly derivative() const;
    RationalPoly integral() const;       // zero constant of integration
    RationalPoly times_x(int power) const;

    Poly to_complex() const;
    double operator()(double x) const;
    Complex operator()(Complex x) const;
    std::string to_string(const std::string& var = "x") const;

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const Rational& s, const RationalPoly& p);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs == b.coeffs; }
};

Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

// Distance from z to the nearest non-positive integer, or +inf when Re z > 0.5.
double distance_to_pole(Complex z);

Complex gamma_complex(Complex z);
Complex log_gamma(Complex z);
Complex rgamma(Complex z);     // 1/Gamma, entire

Complex pochhammer(Complex x, int k);
Complex hankel_coefficient(Complex nu, int k);
Complex chebyshev_u(int m, Complex nu);

RationalPoly wright_q_poly(int m);
std::array<RationalPoly, 3> abc_polys(int n);
std::pair<Poly, Poly> d_polys(int n);

Complex lommel_ck(Complex mu, Complex nu, int k);

} // namespace lommelq
