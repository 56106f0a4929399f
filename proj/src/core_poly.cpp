#include "lommelq/core_poly.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lommelq/errors.hpp"

namespace lommelq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double pole_tol = 1e-12;

// Lanczos coefficients, g = 7, n = 9.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_log_gamma(Complex z) {
    // valid for Re z >= 0.5
    z -= 1.0;
    Complex x = lanczos_c[0];
    for (std::size_t i = 1; i < lanczos_c.size(); ++i)
        x += lanczos_c[i] / (z + static_cast<double>(i));
    Complex t = z + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

void Poly::trim() {
    while (!coeffs.empty() && coeffs.back() == Complex(0.0, 0.0)) coeffs.pop_back();
}

Complex Poly::operator()(Complex x) const {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Complex> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.push_back(coeffs[k] * static_cast<double>(k));
    return Poly(std::move(d));
}

void RationalPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

RationalPoly RationalPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.push_back(coeffs[k] * static_cast<int>(k));
    return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::integral() const {
    if (coeffs.empty()) return {};
    std::vector<Rational> r(coeffs.size() + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) r[k + 1] = coeffs[k] / static_cast<int>(k + 1);
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::times_x(int power) const {
    if (coeffs.empty()) return {};
    std::vector<Rational> r(static_cast<std::size_t>(power), Rational(0));
    r.insert(r.end(), coeffs.begin(), coeffs.end());
    return RationalPoly(std::move(r));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> r(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) r[k] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) r[k] += b.coeffs[k];
    return RationalPoly(std::move(r));
}

RationalPoly operator*(const Rational& s, const RationalPoly& p) {
    std::vector<Rational> r = p.coeffs;
    for (auto& c : r) c *= s;
    return RationalPoly(std::move(r));
}

Poly RationalPoly::to_complex() const {
    std::vector<Complex> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) c.emplace_back(static_cast<double>(q), 0.0);
    return Poly(std::move(c));
}

double RationalPoly::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
}

Complex RationalPoly::operator()(Complex x) const {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == 1;
        if (!unit || k == 0) out << mag;
        if (k > 0) {
            if (!unit) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

Complex sin_pi(Complex z) {
    // reduce the real part exactly so integer arguments give exact zeros
    double x = z.real();
    double n = std::round(x);
    double f = x - n;
    double sign = std::fmod(std::abs(n), 2.0) == 1.0 ? -1.0 : 1.0;
    Complex w(f * pi, z.imag() * pi);
    return sign * std::sin(w);
}

Complex cos_pi(Complex z) {
    double x = z.real();
    double n = std::round(x);
    double f = x - n;
    double sign = std::fmod(std::abs(n), 2.0) == 1.0 ? -1.0 : 1.0;
    if (std::abs(f) == 0.5 && z.imag() == 0.0) return 0.0;
    Complex w(f * pi, z.imag() * pi);
    return sign * std::cos(w);
}

double distance_to_pole(Complex z) {
    if (z.real() > 0.5) return std::numeric_limits<double>::infinity();
    double n = std::min(0.0, std::round(z.real()));
    return std::abs(z - Complex(n, 0.0));
}

Complex log_gamma(Complex z) {
    if (distance_to_pole(z) < pole_tol) throw PoleError("log_gamma: argument at a pole of Gamma");
    if (z.real() < 0.5) {
        // reflection; branch of the log is irrelevant for exp()
        return std::log(pi) - std::log(sin_pi(z)) - lanczos_log_gamma(1.0 - z);
    }
    return lanczos_log_gamma(z);
}

Complex gamma_complex(Complex z) {
    if (distance_to_pole(z) < pole_tol) throw PoleError("gamma: argument within 1e-12 of a non-positive integer");
    if (z.real() < 0.5) return pi / (sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)));
    if (z.imag() == 0.0 && z.real() == std::round(z.real()) && z.real() <= 20.0) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(z.real()); ++k) f *= k;
        return f;
    }
    return std::exp(lanczos_log_gamma(z));
}

Complex rgamma(Complex z) {
    if (z.real() < 0.5) return sin_pi(z) * std::exp(lanczos_log_gamma(1.0 - z)) / pi;
    return 1.0 / gamma_complex(z);
}

Complex pochhammer(Complex x, int k) {
    Complex r = 1.0;
    for (int j = 0; j < k; ++j) r *= x + static_cast<double>(j);
    return r;
}

Complex hankel_coefficient(Complex nu, int k) {
    Complex r = 1.0;
    for (int j = 0; j < k; ++j) r *= -(0.5 - nu + double(j)) * (0.5 + nu + double(j)) / double(j + 1);
    return r;
}

Complex chebyshev_u(int m, Complex nu) {
    if (m < 0) return -chebyshev_u(-m, nu);
    if (m == 0) return 0.0;
    Complex c2 = 2.0 * cos_pi(nu);
    Complex prev = 0.0, cur = 1.0;
    for (int j = 1; j < m; ++j) {
        Complex next = c2 * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

RationalPoly wright_q_poly(int m) {
    if (m < 1) throw ParamError("wright_q_poly: m must be >= 1");
    RationalPoly q(std::vector<Rational>{Rational(0), Rational(1)});
    for (int j = 1; j < m; ++j) q = q + Rational(j) * q.integral();
    return q;
}

std::array<RationalPoly, 3> abc_polys(int n) {
    if (n < 1) throw ParamError("abc_polys: n must be >= 1");
    RationalPoly a, b, c(std::vector<Rational>{Rational(1)});
    for (int j = 2; j <= n; ++j) {
        Rational s(-2 * (j - 1));
        RationalPoly na = s * a + a.derivative().times_x(1) + c;
        RationalPoly nb = s * b + b.derivative().times_x(1) + Rational(-1) * c.times_x(2);
        RationalPoly nc = s * c + b + c.derivative().times_x(1);
        a = std::move(na);
        b = std::move(nb);
        c = std::move(nc);
    }
    return {a, b, c};
}

std::pair<Poly, Poly> d_polys(int n) {
    auto abc = abc_polys(n);
    const auto& b = abc[1].coeffs;
    const auto& c = abc[2].coeffs;
    std::size_t len = std::max(b.size(), c.size() + 1);
    std::vector<Complex> plus(len), minus(len);
    for (std::size_t k = 0; k < len; ++k) {
        double re = k < b.size() ? static_cast<double>(b[k]) : 0.0;
        double im = (k >= 1 && k - 1 < c.size()) ? static_cast<double>(c[k - 1]) : 0.0;
        plus[k] = {re, im};
        minus[k] = {re, -im};
    }
    return {Poly(std::move(plus)), Poly(std::move(minus))};
}

Complex lommel_ck(Complex mu, Complex nu, int k) {
    Complex r = 1.0;
    for (int m = 1; m <= k; ++m) {
        Complex t = mu - double(2 * m - 1);
        r *= t * t - nu * nu;
    }
    return r;
}

} // namespace lommelq
