#include "lommelq/wright.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "lommelq/core_poly.hpp"
#include "lommelq/errors.hpp"

namespace lommelq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int max_j = 12;

// Odd-index Q polynomials as doubles, built once.
const std::vector<Poly>& odd_q_table() {
    static const std::vector<Poly> table = [] {
        std::vector<Poly> t;
        for (int j = 0; j <= max_j; ++j) t.push_back(wright_q_poly(2 * j + 1).to_complex());
        return t;
    }();
    return table;
}

double sgn(long n) { return n > 0 ? 1.0 : -1.0; }

} // namespace

WrightTarget make_wright_target(Complex a) {
    if (a == Complex(0.0, 0.0) || !std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw ParamError("wright target a must be finite and non-zero");
    return {a, std::abs(a), std::arg(a)};
}

bool wright_valid(const WrightTarget& t, long n) {
    if (n == 0) return false;
    double H = 2.0 * std::abs(n) * pi + sgn(n) * t.alpha - pi / 2.0;
    if (H <= 1.0) return false;
    double beta = std::log(t.A / H);
    double logA = std::log(t.A);
    bool first = 2.0 * H * std::abs(beta) < (H - 1.0) * (H - 1.0);
    bool second = logA * logA < (H - pi / 2.0) * (H - pi / 2.0) + 2.0 * (1.0 + logA) * std::log(H) + 1.0;
    return first && second;
}

ZeroSeed wright_seed(const WrightTarget& t, long n, int j_max) {
    if (n == 0) throw ParamError("wright seeds need a non-zero index");
    if (j_max < 0 || j_max > max_j) throw ParamError("eta truncation index out of range");
    ZeroSeed s;
    s.n = n;
    s.j_max = j_max;
    s.H = 2.0 * std::abs(n) * pi + sgn(n) * t.alpha - pi / 2.0;
    s.valid = wright_valid(t, n);
    if (s.H <= 0.0) return s;
    s.beta = std::log(t.A / s.H);
    const auto& q = odd_q_table();
    double sum = 0.0, hpow = 1.0 / s.H, h2 = 1.0 / (s.H * s.H);
    for (int j = 0; j <= j_max; ++j) {
        double term = q[j](Complex(s.beta, 0.0)).real() * hpow;
        sum += (j % 2 == 0) ? term : -term;
        hpow *= h2;
    }
    s.eta = sum;
    s.x = (s.H + s.eta) * std::tan(s.eta);
    s.y = sgn(n) * (s.H + s.eta);
    return s;
}

Box wright_bounds(const WrightTarget& t, long n) {
    if (!wright_valid(t, n)) throw ValidityError("seed validity inequalities fail for n = " + std::to_string(n));
    long an = std::abs(n);
    Box b;
    b.x_lo = 2.0 * std::log(t.A / ((2.0 * an + 1.0) * pi)) - 1.0;
    b.x_hi = an == 1 ? INFINITY : std::log(t.A / (2.0 * (an - 1.0) * pi)) + 1.0;
    if (n > 0) {
        b.y_lo = (2.0 * n - 1.0) * pi + t.alpha;
        b.y_hi = 2.0 * n * pi + t.alpha;
    } else {
        b.y_lo = 2.0 * n * pi + t.alpha;
        b.y_hi = (2.0 * n + 1.0) * pi + t.alpha;
    }
    return b;
}

bool subseq_hypothesis(const WrightTarget& t, long m) {
    return m >= 1 && std::log(t.A) - std::log(m * pi) + 1.0 < -3.0;
}

double subseq_d(const WrightTarget& t, long m, double r) { return 2.0 * m * pi * r * r - t.alpha - pi; }

ZeroSeed wright_subseq_seed(const WrightTarget& t, long m, long k, int j_max) {
    if (!subseq_hypothesis(t, m))
        throw HypothesisError("subsequence hypothesis log A - log(m pi) + 1 < -3 fails for m = " + std::to_string(m));
    if (k < 1) throw HypothesisError("subsequence index k must be positive");
    ZeroSeed s = wright_seed(t, -m * k * k, j_max);
    if (!s.valid) throw ValidityError("seed validity inequalities fail for k = " + std::to_string(k));
    return s;
}

Box subseq_bounds(const WrightTarget& t, long m, long k) {
    double lk = std::log(static_cast<double>(k));
    return {-5.0 * lk, -2.0 * lk - 2.0, -subseq_d(t, m, k + 1.0), -subseq_d(t, m, static_cast<double>(k))};
}

Complex wright_residual(const WrightTarget& t, Complex z) { return z * std::exp(z) - t.a; }

RefinedZero wright_refine(const WrightTarget& t, const ZeroSeed& seed, double tol) {
    if (!seed.valid) throw ValidityError("refinement needs a valid seed");
    if (tol < 1e-14) throw ParamError("refinement tolerance below 1e-14");
    Box box = wright_bounds(t, seed.n);
    RefinedZero out{seed, seed.z(), 0.0, 0};
    Complex z = seed.z();
    if (!box.contains(z)) throw BoxEscapeError("seed lies outside its bound box");
    double res = std::abs(wright_residual(t, z));
    for (int it = 0; it <= 50; ++it) {
        if (res <= tol) {
            out.z = z;
            out.residual = res;
            out.iterations = it;
            return out;
        }
        if (it == 50) break;
        Complex step = (z - t.a * std::exp(-z)) / (1.0 + z);
        Complex next = z - step;
        double next_res = std::abs(wright_residual(t, next));
        for (int h = 0; h < 10 && !(next_res < res); ++h) {
            step *= 0.5;
            next = z - step;
            next_res = std::abs(wright_residual(t, next));
        }
        z = next;
        res = next_res;
        if (!box.contains(z)) throw BoxEscapeError("newton iterate left the bound box for n = " + std::to_string(seed.n));
    }
    throw DivergenceError("newton refinement did not reach the tolerance in 50 iterations");
}

} // namespace lommelq
