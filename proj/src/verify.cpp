#include "lommelq/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "lommelq/bessel.hpp"
#include "lommelq/errors.hpp"

namespace lommelq {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

// Sixth-order central difference weights for offsets -3..3.
constexpr std::array<double, 7> d1_weights{-1.0 / 60.0, 3.0 / 20.0, -3.0 / 4.0, 0.0, 3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};
constexpr std::array<double, 7> d2_weights{1.0 / 90.0, -3.0 / 20.0, 3.0 / 2.0, -49.0 / 18.0, 3.0 / 2.0, -3.0 / 20.0, 1.0 / 90.0};

// The point zeta + delta reached from zeta without crossing a cut.
BranchPoint shifted(const BranchPoint& z, Complex delta) {
    Complex ratio = 1.0 + delta / z.value();
    return {z.modulus * std::abs(ratio), z.arg + std::arg(ratio)};
}

Complex rhs_zeta(const std::vector<Term>& rhs, const BranchPoint& z) {
    Complex s = 0.0;
    for (const auto& t : rhs) s += t.sigma * z.pow(t.mu + 1.0);
    return s;
}

bool all_sigma_zero(const std::vector<Term>& terms) {
    return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return std::abs(t.sigma) == 0.0; });
}

} // namespace

void OdeParams::validate() const {
    if (std::abs(L) == 0.0 || std::abs(M) == 0.0) throw ParamError("L and M must be non-zero");
    if (terms.empty() || all_sigma_zero(terms)) throw ParamError("at least one sigma_j must be non-zero");
    std::set<double> seen;
    for (const auto& t : terms)
        if (!seen.insert(t.mu.real()).second) throw ParamError("the real parts of mu_j must be pairwise distinct");
}

std::pair<Complex, Complex> to_hankel_coefficients(Complex A, Complex B) {
    return {0.5 * (A - I * B), 0.5 * (A + I * B)};
}

std::pair<Complex, Complex> from_hankel_coefficients(Complex C, Complex D) {
    return {C + D, I * (C - D)};
}

BranchPoint solution_zeta(const OdeParams& params, Complex z, int branch_shift) {
    Complex w = params.M * z;
    return {std::abs(params.L) * std::exp(w.real()), std::arg(params.L) + w.imag() - branch_shift * pi};
}

SolutionValue assemble_solution_with_derivative(const SolutionSpec& spec, Complex z, int branch_shift) {
    const OdeParams& P = spec.params;
    BranchPoint zeta = solution_zeta(P, z, branch_shift);
    Complex y = 0.0, dy = 0.0;
    if (spec.A != Complex(0.0) || spec.B != Complex(0.0)) {
        BesselPairDerivative b = bessel_pair_derivative(P.nu, zeta);
        y += spec.A * b.value.J + spec.B * b.value.Y;
        dy += spec.A * b.dJ + spec.B * b.dY;
    }
    for (const auto& t : P.terms) {
        if (std::abs(t.sigma) == 0.0) continue;
        LommelParams lp{t.mu, P.nu};
        y += t.sigma * lommel_on_branch(lp, zeta).value;
        dy += t.sigma * lommel_derivative_on_branch(lp, zeta).value;
    }
    Complex e = std::exp(-P.N * z);
    return {e * y, e * (-P.N * y + P.M * zeta.value() * dy)};
}

Complex assemble_solution(const SolutionSpec& spec, Complex z, int branch_shift) {
    return assemble_solution_with_derivative(spec, z, branch_shift).value;
}

Jet degenerate_jet(const DegeneratePoly& poly, const BranchPoint& z) {
    Jet j{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < poly.poly.coeffs.size(); ++k) {
        Complex e = poly.exponent - 2.0 * static_cast<double>(k);
        Complex a = poly.poly.coeffs[k];
        j.y += a * z.pow(e);
        j.dy += a * e * z.pow(e - 1.0);
        j.d2y += a * e * (e - 1.0) * z.pow(e - 2.0);
    }
    return j;
}

namespace {

// C' = C_{nu-1} - (nu/z) C and C'' from the same identity one order down.
Jet bessel_jet(Complex nu, const BranchPoint& z, bool want_y) {
    BesselPair c0 = bessel_pair(nu, z), c1 = bessel_pair(nu - 1.0, z), c2 = bessel_pair(nu - 2.0, z);
    Complex v0 = want_y ? c0.Y : c0.J, v1 = want_y ? c1.Y : c1.J, v2 = want_y ? c2.Y : c2.J;
    Complex zi = 1.0 / z.value();
    Complex d0 = v1 - nu * zi * v0;
    Complex d1 = v2 - (nu - 1.0) * zi * v1;
    return {v0, d0, d1 + nu * zi * zi * v0 - nu * zi * d0};
}

} // namespace

Jet bessel_j_jet(Complex nu, const BranchPoint& z) { return bessel_jet(nu, z, false); }
Jet bessel_y_jet(Complex nu, const BranchPoint& z) { return bessel_jet(nu, z, true); }

Jet lommel_jet(const LommelParams& params, const BranchPoint& z) {
    Complex mu = params.mu, nu = params.nu;
    Complex zi = 1.0 / z.value();
    Complex s0 = lommel_on_branch({mu, nu}, z).value;
    Complex s1 = lommel_on_branch({mu - 1.0, nu - 1.0}, z).value;
    Complex c0 = mu + nu - 1.0, c1 = mu + nu - 3.0;
    Complex s2 = c1 != Complex(0.0) ? lommel_on_branch({mu - 2.0, nu - 2.0}, z).value : Complex(0.0);
    Complex d0 = c0 * s1 - nu * zi * s0;
    Complex d1 = c1 * s2 - (nu - 1.0) * zi * s1;
    return {s0, d0, c0 * d1 + nu * zi * zi * s0 - nu * zi * d0};
}

ZetaJet finite_difference_jet(std::function<Complex(const BranchPoint&)> f, double h) {
    if (!(h > 0.0)) throw DerivativeError("finite-difference step must be positive");
    return [f = std::move(f), h](const BranchPoint& z) {
        Jet j{0.0, 0.0, 0.0};
        for (int i = 0; i < 7; ++i) {
            Complex v = i == 3 ? f(z) : f(shifted(z, static_cast<double>(i - 3) * h));
            if (i == 3) j.y = v;
            j.dy += d1_weights[i] * v;
            j.d2y += d2_weights[i] * v;
        }
        j.dy /= h;
        j.d2y /= h * h;
        return j;
    };
}

Complex ode_residual_zeta(Complex nu, const std::vector<Term>& rhs, const ZetaJet& y, const BranchPoint& zeta) {
    if (!(zeta.modulus > 0.0)) throw ParamError("residual needs a non-zero point");
    if (!y) throw DerivativeError("no derivative path supplied");
    Jet j = y(zeta);
    Complex z = zeta.value();
    return z * z * j.d2y + z * j.dy + (z * z - nu * nu) * j.y - rhs_zeta(rhs, zeta);
}

double ode_residual_zeta_scale(Complex nu, const std::vector<Term>& rhs, const ZetaJet& y, const BranchPoint& zeta) {
    Jet j = y(zeta);
    Complex z = zeta.value();
    return std::max({std::abs(z * z * j.d2y), std::abs(z * j.dy), std::abs(z * z * j.y), std::abs(nu * nu * j.y),
                     std::abs(rhs_zeta(rhs, zeta))});
}

Complex ode_rhs_z(const OdeParams& P, Complex z) {
    Complex s = 0.0;
    for (const auto& t : P.terms)
        s += t.sigma * std::exp((t.mu + 1.0) * std::log(P.L)) * P.M * P.M * std::exp((P.M * (t.mu + 1.0) - P.N) * z);
    return s;
}

Complex ode_residual_z(const SolutionSpec& spec, Complex z, double h) {
    if (!(h >= 1e-6 && h <= 1e-3)) throw DerivativeError("finite-difference step must lie in [1e-6, 1e-3]");
    const OdeParams& P = spec.params;
    Complex f = 0.0, d1 = 0.0, d2 = 0.0;
    for (int i = 0; i < 7; ++i) {
        Complex v = assemble_solution(spec, z + static_cast<double>(i - 3) * h);
        if (i == 3) f = v;
        d1 += d1_weights[i] * v;
        d2 += d2_weights[i] * v;
    }
    d1 /= h;
    d2 /= h * h;
    Complex coef = P.L * P.L * P.M * P.M * std::exp(2.0 * P.M * z) + (P.N * P.N - P.nu * P.nu * P.M * P.M);
    return d2 + 2.0 * P.N * d1 + coef * f - ode_rhs_z(P, z);
}

double ode_residual_z_scale(const SolutionSpec& spec, Complex z) {
    const OdeParams& P = spec.params;
    Complex f = assemble_solution(spec, z);
    Complex coef = P.L * P.L * P.M * P.M * std::exp(2.0 * P.M * z);
    Complex shift = P.N * P.N - P.nu * P.nu * P.M * P.M;
    return std::max({std::abs(ode_rhs_z(P, z)), std::abs(coef * f), std::abs(shift * f)});
}

std::vector<GaussRational> degenerate_symbolic_residual(const GaussRational& mu, const GaussRational& nu, int p) {
    if (p < 0) throw ParamError("p must be non-negative");
    GaussRational odd{Rational(2 * p + 1), Rational(0)};
    if (!(mu - nu == odd) && !(mu + nu == odd)) throw NotDegenerateError("mu -/+ nu is not 2p+1");
    GaussRational one{Rational(1), Rational(0)};
    GaussRational nu2 = nu * nu;
    auto shifted_sq = [&](int s) {
        GaussRational e = mu + GaussRational{Rational(s), Rational(0)};
        return e * e - nu2;
    };
    // a_k = (-1)^k prod_{m=1}^{k} [(mu - 2m + 1)^2 - nu^2]
    std::vector<GaussRational> a(p + 1);
    for (int k = 0; k <= p; ++k) {
        GaussRational c = one;
        for (int m = 1; m <= k; ++m) c = c * shifted_sq(1 - 2 * m);
        a[k] = (k % 2 == 0) ? c : GaussRational{-c.re, -c.im};
    }
    std::vector<GaussRational> r;
    r.push_back(a[0] - one);
    for (int j = 1; j <= p; ++j) r.push_back(a[j] + a[j - 1] * shifted_sq(1 - 2 * j));
    r.push_back(a[p] * shifted_sq(-1 - 2 * p));
    return r;
}

QuantizationVerdict quantization_classify(const SolutionSpec& spec) {
    QuantizationVerdict v;
    v.coefficients_vanish = spec.A == Complex(0.0) && spec.B == Complex(0.0);
    bool all_terminating = true;
    for (const auto& t : spec.params.terms) {
        DegeneracyClass c = classify_degeneracy({t.mu, spec.params.nu});
        v.per_term.push_back(c);
        if (std::abs(t.sigma) != 0.0 && !c.terminating()) all_terminating = false;
    }
    v.finite_lambda_predicted = v.coefficients_vanish && all_terminating && !all_sigma_zero(spec.params.terms);
    return v;
}

CensusCurve zero_census(const SolutionSpec& spec, const std::vector<double>& r_list) {
    if (r_list.empty()) throw ParamError("census needs at least one radius");
    for (std::size_t i = 0; i < r_list.size(); ++i) {
        if (!(r_list[i] > 0.0)) throw ParamError("census radii must be positive");
        if (i > 0 && !(r_list[i] > r_list[i - 1])) throw ParamError("census radii must be ascending");
    }
    if (r_list.back() > 8.0) throw ParamError("census radii are limited to 8");
    AnalyticFn f = [&spec](const BranchPoint& p) {
        SolutionValue s = assemble_solution_with_derivative(spec, p.value());
        return std::make_pair(s.value, s.derivative);
    };
    CensusCurve curve;
    for (double r : r_list) {
        long count = -1;
        for (double factor : {1.0, 1.01, 0.99}) {
            try {
                count = count_zeros(f, build_square_contour(0.0, r * factor)).winding;
                break;
            } catch (const ZeroOnContour&) {
                if (factor == 0.99) throw;
            }
        }
        curve.points.push_back({r, count});
    }
    std::size_t n = curve.points.size();
    if (n >= 2) curve.saturated = curve.points[n - 1].count == curve.points[n - 2].count;
    if (n >= 3) {
        bool growing = true;
        for (std::size_t i = n - 2; i < n; ++i) {
            long prev = curve.points[i - 1].count, cur = curve.points[i].count;
            if (!(prev > 0 && static_cast<double>(cur) > 2.0 * static_cast<double>(prev))) growing = false;
        }
        curve.lambda_infinite = growing;
        std::size_t start = n - 3;
        bool positive = true;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = start; i < n; ++i) {
            if (curve.points[i].count <= 0) positive = false;
            double x = std::log(curve.points[i].r);
            double y = positive ? std::log(static_cast<double>(curve.points[i].count)) : 0.0;
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        curve.lambda_estimate = positive ? (3.0 * sxy - sx * sy) / (3.0 * sxx - sx * sx) : 0.0;
    }
    return curve;
}

Rational table1_K(int row, int p) {
    Rational q(p);
    switch (row) {
    case 1: return q * q;
    case 2: return (2 * q + 1) * (2 * q + 1) / 4;
    case 3: return (q + 1) * (q + 1);
    case 4: return (2 * q + 1) * (2 * q + 1) / 16;
    default: throw ParamError("table rows are numbered 1 to 4");
    }
}

Table1Report table1_case(int row, int p, Complex sigma, const std::vector<double>& r_list) {
    if (p < 0 || p > 5) throw ParamError("table cases are limited to 0 <= p <= 5");
    if (std::abs(sigma) == 0.0) throw ParamError("sigma must be non-zero");
    Rational nu, mu;
    switch (row) {
    case 1: nu = 2 * p; mu = 1; break;
    case 2: nu = 2 * p + 1; mu = 0; break;
    case 3: nu = 2 * p + 2; mu = -1; break;
    case 4: nu = Rational(2 * p + 1, 2); mu = nu; break;
    default: throw ParamError("table rows are numbered 1 to 4");
    }
    Table1Report rep;
    rep.row = row;
    rep.p = p;
    rep.K = nu * nu / 4;
    rep.K_expected = table1_K(row, p);
    rep.spec.params.L = 2.0;
    rep.spec.params.M = 0.5;
    rep.spec.params.N = 0.0;
    rep.spec.params.nu = nu.convert_to<double>();
    rep.spec.params.terms = {{sigma, mu.convert_to<double>()}};
    rep.spec.params.validate();
    const SolutionSpec& spec = rep.spec;
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        for (double y : {-1.5, -0.5, 0.5, 1.5}) {
            Complex z{x, y};
            Complex res = ode_residual_z(spec, z);
            rep.residual_max = std::max(rep.residual_max, std::abs(res) / ode_residual_z_scale(spec, z));
        }
    }
    rep.census = zero_census(spec, r_list);
    return rep;
}

} // namespace lommelq
