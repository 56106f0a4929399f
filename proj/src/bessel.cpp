#include "lommelq/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "lommelq/core_poly.hpp"
#include "lommelq/errors.hpp"

namespace lommelq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr Complex I(0.0, 1.0);

constexpr double regime_switch = 12.0;
constexpr double series_limit = 40.0;
constexpr double integer_window = 1e-6;
constexpr double richardson_h = 1e-4;

struct Sum {
    Complex value;
    double err;
    int terms;
};

// J_nu on the sheet carried by z, straight from the power series.
Sum j_series(Complex nu, const BranchPoint& z) {
    Complex zv = z.value();
    Complex x = -0.25 * zv * zv;
    Complex pk = 1.0;                 // x^k / k!
    Complex rg = rgamma(nu + 1.0);    // 1/Gamma(nu+k+1)
    Complex sum = rg;
    double biggest = std::abs(rg);
    int k = 1;
    double peak = 0.5 * z.modulus;
    for (; k < 1000; ++k) {
        pk *= x / double(k);
        Complex a = nu + double(k) + 1.0;
        if (a.real() < 1.5)
            rg = rgamma(a);
        else
            rg /= a - 1.0;
        Complex term = pk * rg;
        sum += term;
        biggest = std::max(biggest, std::abs(term));
        if (k > peak && a.real() > 1.5 && std::abs(term) <= 1e-17 * std::abs(sum)) break;
        if (k > peak && a.real() > 1.5 && biggest == 0.0) break;
    }
    if (k >= 1000) throw ConvergenceError("bessel series did not converge");
    Complex pre = std::exp(nu * (z.log() - std::log(2.0)));
    double err = (4.0 * eps * biggest * std::sqrt(double(k)) + 1e-17 * std::abs(sum)) * std::abs(pre);
    return {pre * sum, err, k};
}

// Hankel expansion with the number of terms either fixed (p > 0) or chosen at
// the smallest term (p == 0).
struct AsymSum {
    Complex value;
    double err;
    int terms;
    bool past_optimal;
};

AsymSum hankel_expansion(int kind, Complex nu, const BranchPoint& z, int p) {
    Complex zv = z.value();
    Complex w = kind == 1 ? 2.0 * I * zv : -2.0 * I * zv;
    Complex term = 1.0, sum = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    int limit = p > 0 ? p : 400;
    int k = 0;
    bool past = false;
    for (; k < limit; ++k) {
        double mag = std::abs(term);
        if (p == 0 && (mag > prev || mag <= 1e-17 * std::abs(sum))) break;
        if (p > 0 && mag > prev) past = true;
        sum += term;
        prev = mag;
        term *= (0.5 - nu + double(k)) * (0.5 + nu + double(k)) / (double(k + 1) * w);
        if (term == Complex(0.0)) {
            ++k;
            break;
        }
    }
    double omitted = std::abs(term);
    if (p > 0 && k == p && omitted > prev) past = true;
    Complex phase = zv - 0.5 * nu * pi - 0.25 * pi;
    Complex expo = kind == 1 ? std::exp(I * phase) : std::exp(-I * phase);
    Complex pre = std::sqrt(2.0 / pi) * std::exp(-0.5 * z.log()) * expo;
    // the omitted term bounds the remainder only on the half plane where the
    // exponential decays; the bound widens towards the sector edges
    double t = kind == 1 ? z.arg : -z.arg;
    double widen = 1.0;
    if (t < 0.0 || t > pi) {
        double chi = std::sqrt(pi) * std::exp(std::lgamma(0.5 * k + 1.0) - std::lgamma(0.5 * k + 0.5));
        widen = (t >= -0.5 * pi && t <= 1.5 * pi) ? chi : 2.0 * chi;
    }
    // rounding in the phase grows with the modulus
    double err = std::abs(pre) * (widen * omitted + eps * (4.0 + z.modulus) * std::abs(sum));
    return {pre * sum, err, k, past};
}

bool near_integer(Complex nu) {
    return std::abs(nu - Complex(std::round(nu.real()), 0.0)) < integer_window;
}

bool exact_integer(Complex nu) {
    return nu.imag() == 0.0 && nu.real() == std::round(nu.real());
}

// Y_n for integer n >= 0 from the logarithmic series; the log carries the sheet.
Sum y_integer_series(int n, const BranchPoint& z, const Sum& jn) {
    constexpr double euler = 0.57721566490153286061;
    Complex zv = z.value();
    Complex q = 0.25 * zv * zv;
    Complex half = 0.5 * zv;

    Complex finite = 0.0;
    double fact_a = 1.0;   // (n-k-1)!
    for (int j = 2; j < n; ++j) fact_a *= j;
    double fact_k = 1.0;
    Complex qk = 1.0;
    double big1 = 0.0;
    for (int k = 0; k < n; ++k) {
        Complex t = fact_a / fact_k * qk;
        finite += t;
        big1 = std::max(big1, std::abs(t));
        qk *= q;
        fact_k *= k + 1;
        if (n - k - 1 > 0) fact_a /= n - k - 1;
    }
    Complex inv_pow = std::pow(half, -n);
    Complex part1 = -inv_pow * finite / pi;

    Complex logpart = (2.0 / pi) * (z.log() - std::log(2.0)) * jn.value;

    double hk = 0.0, hnk = 0.0;
    for (int j = 1; j <= n; ++j) hnk += 1.0 / j;
    double denom = 1.0;   // k! (n+k)!
    for (int j = 2; j <= n; ++j) denom *= j;
    Complex x = -q, xk = 1.0, sum = 0.0;
    double big3 = 0.0;
    int k = 0;
    for (; k < 1000; ++k) {
        Complex t = (hk + hnk - 2.0 * euler) * xk / denom;
        sum += t;
        big3 = std::max(big3, std::abs(t));
        if (k > 0.5 * z.modulus && std::abs(t) <= 1e-17 * std::abs(sum)) break;
        xk *= x;
        hk += 1.0 / (k + 1);
        hnk += 1.0 / (n + k + 1);
        denom *= double(k + 1) * double(n + k + 1);
    }
    Complex pw = std::pow(half, n);
    Complex part3 = -pw * sum / pi;
    double err = 4.0 * eps * (std::abs(inv_pow) * big1 / pi + std::abs(pw) * big3 * std::sqrt(double(k + 1)) / pi) +
                 2.0 / pi * std::abs(z.log() - std::log(2.0)) * jn.err + 4.0 * eps * std::abs(logpart);
    return {part1 + logpart + part3, err, k};
}

BesselPair pair_series_nonint(Complex nu, const BranchPoint& z) {
    Sum jp = j_series(nu, z);
    Sum jm = j_series(-nu, z);
    Complex s = sin_pi(nu), c = cos_pi(nu);
    BesselPair r;
    r.J = jp.value;
    r.err_J = jp.err;
    r.Y = (jp.value * c - jm.value) / s;
    r.err_Y = (jp.err * std::abs(c) + jm.err) / std::abs(s) + 4.0 * eps * std::abs(r.Y);
    r.method = Method::Series;
    return r;
}

BesselPair pair_series(Complex nu, const BranchPoint& z) {
    if (!near_integer(nu)) return pair_series_nonint(nu, z);
    Sum jp = j_series(nu, z);
    if (exact_integer(nu)) {
        int n = static_cast<int>(std::round(nu.real()));
        double sign = (n < 0 && n % 2 != 0) ? -1.0 : 1.0;
        Sum jabs = n < 0 ? j_series(Complex(-n), z) : jp;
        Sum y = y_integer_series(std::abs(n), z, jabs);
        BesselPair r;
        r.J = jp.value;
        r.err_J = jp.err;
        r.Y = sign * y.value;
        r.err_Y = y.err;
        r.method = Method::Series;
        return r;
    }
    auto avg = [&](double h) {
        BesselPair a = pair_series_nonint(nu + h, z);
        BesselPair b = pair_series_nonint(nu - h, z);
        return std::pair<Complex, double>{0.5 * (a.Y + b.Y), 0.5 * (a.err_Y + b.err_Y)};
    };
    auto [y1, e1] = avg(richardson_h);
    auto [y2, e2] = avg(2.0 * richardson_h);
    BesselPair r;
    r.J = jp.value;
    r.err_J = jp.err;
    r.Y = (4.0 * y1 - y2) / 3.0;
    // the h^4 remainder is tiny next to the cancellation in each Y(nu +- h)
    r.err_Y = (4.0 * e1 + e2) / 3.0 + std::abs(y1 - y2) * 1e-4;
    r.method = Method::Series;
    return r;
}

// Everything known at one principal point.
struct Full {
    Complex J, Y, h1, h2;
    double eJ = 0.0, eY = 0.0, e1 = 0.0, e2 = 0.0;
    Method method = Method::Series;
    int detail = 0;
};

Full from_jy(const BesselPair& p) {
    Full f;
    f.J = p.J;
    f.Y = p.Y;
    f.eJ = p.err_J;
    f.eY = p.err_Y;
    f.h1 = p.J + I * p.Y;
    f.h2 = p.J - I * p.Y;
    f.e1 = f.e2 = p.err_J + p.err_Y;
    f.method = p.method;
    f.detail = p.detail;
    return f;
}

void fill_jy(Full& f) {
    f.J = 0.5 * (f.h1 + f.h2);
    f.Y = (f.h1 - f.h2) / (2.0 * I);
    f.eJ = f.eY = 0.5 * (f.e1 + f.e2);
}

double quality(const Full& f) {
    double scale = std::max({std::abs(f.J), std::abs(f.Y), 1e-300});
    return std::max({f.eJ / scale, f.eY / scale, f.e1 / std::max(std::abs(f.h1), 1e-300),
                     f.e2 / std::max(std::abs(f.h2), 1e-300)});
}

// Hankel pair from the expansions. Each function is expanded directly where
// its expansion is uniform; the other one comes from a half-turn connection.
Full full_asymptotic(Complex nu, const BranchPoint& z) {
    Full f;
    f.method = Method::Asymptotic;
    Complex c2 = 2.0 * cos_pi(nu);
    if (std::abs(z.arg) <= 0.5 * pi) {
        AsymSum a = hankel_expansion(1, nu, z, 0), b = hankel_expansion(2, nu, z, 0);
        f.h1 = a.value;
        f.e1 = a.err;
        f.h2 = b.value;
        f.e2 = b.err;
        f.detail = std::max(a.terms, b.terms);
    } else if (z.arg > 0) {
        AsymSum a = hankel_expansion(1, nu, z, 0);
        BranchPoint zr = z.rotated(-pi);
        AsymSum r1 = hankel_expansion(1, nu, zr, 0), r2 = hankel_expansion(2, nu, zr, 0);
        Complex e = std::exp(nu * pi * I);
        f.h1 = a.value;
        f.e1 = a.err;
        f.h2 = c2 * r2.value + e * r1.value;
        f.e2 = std::abs(c2) * r2.err + std::abs(e) * r1.err;
        f.detail = std::max({a.terms, r1.terms, r2.terms});
    } else {
        AsymSum b = hankel_expansion(2, nu, z, 0);
        BranchPoint zr = z.rotated(pi);
        AsymSum r1 = hankel_expansion(1, nu, zr, 0), r2 = hankel_expansion(2, nu, zr, 0);
        Complex e = std::exp(-nu * pi * I);
        f.h2 = b.value;
        f.e2 = b.err;
        f.h1 = c2 * r1.value + e * r2.value;
        f.e1 = std::abs(c2) * r1.err + std::abs(e) * r2.err;
        f.detail = std::max({b.terms, r1.terms, r2.terms});
    }
    fill_jy(f);
    return f;
}

// Shift the order to |Re nu0| <= 1/2, expand there, and recur toward nu.
// Stable while |nu| stays below the modulus.
Full full_recurrence(Complex nu, const BranchPoint& z) {
    int n = static_cast<int>(std::round(nu.real()));
    int step = n > 0 ? 1 : -1;
    Complex nu0 = nu - double(n);
    Full prev = full_asymptotic(nu0, z);
    Full cur = full_asymptotic(nu0 + double(step), z);
    // worst-case propagation of absolute errors through the recurrence
    double p1 = prev.e1, p2 = prev.e2, c1 = cur.e1, c2 = cur.e2;
    Complex zv = z.value();
    for (int j = 1; j < std::abs(n); ++j) {
        Complex v = nu0 + double(step * j);
        Complex f = 2.0 * v / zv;
        Full next = cur;
        next.h1 = f * cur.h1 - prev.h1;
        next.h2 = f * cur.h2 - prev.h2;
        double n1 = std::abs(f) * c1 + p1 + eps * std::abs(next.h1);
        double n2 = std::abs(f) * c2 + p2 + eps * std::abs(next.h2);
        p1 = c1;
        p2 = c2;
        c1 = n1;
        c2 = n2;
        prev = cur;
        cur = next;
    }
    cur.e1 = c1;
    cur.e2 = c2;
    fill_jy(cur);
    return cur;
}

double quality_jy(const Full& f) {
    double scale = std::max({std::abs(f.J), std::abs(f.Y), 1e-300});
    return std::max(f.eJ, f.eY) / scale;
}
double quality_h1(const Full& f) { return f.e1 / std::max(std::abs(f.h1), 1e-300); }
double quality_h2(const Full& f) { return f.e2 / std::max(std::abs(f.h2), 1e-300); }

// Principal sheet only. Each component is taken from the route that
// estimates it best.
Full full_principal(Complex nu, const BranchPoint& z) {
    if (z.modulus < regime_switch) return from_jy(pair_series(nu, z));
    Full best = full_asymptotic(nu, z);
    if (quality(best) <= 1e-14) return best;
    std::vector<Full> cands{best};
    if (std::abs(nu.real()) >= 1.5 && std::abs(nu) + 1.0 < z.modulus) cands.push_back(full_recurrence(nu, z));
    if (z.modulus <= series_limit) cands.push_back(from_jy(pair_series(nu, z)));
    for (const Full& c : cands) {
        if (quality_jy(c) < quality_jy(best)) {
            best.J = c.J;
            best.Y = c.Y;
            best.eJ = c.eJ;
            best.eY = c.eY;
            best.method = c.method;
            best.detail = c.detail;
        }
        if (quality_h1(c) < quality_h1(best)) {
            best.h1 = c.h1;
            best.e1 = c.e1;
        }
        if (quality_h2(c) < quality_h2(best)) {
            best.h2 = c.h2;
            best.e2 = c.e2;
        }
    }
    if (quality_jy(best) > 1e-6) throw ConvergenceError("bessel: no regime reaches the error target");
    return best;
}

BesselPair to_pair(const Full& f) {
    BesselPair p;
    p.J = f.J;
    p.Y = f.Y;
    p.err_J = f.eJ;
    p.err_Y = f.eY;
    p.method = f.method;
    p.detail = f.detail;
    return p;
}

void check_point(const BranchPoint& z) {
    if (!(z.modulus > 0.0) || !std::isfinite(z.modulus) || !std::isfinite(z.arg))
        throw ParamError("bessel: modulus must be positive and finite");
}

} // namespace

std::string EvalResult::method_name() const {
    switch (method) {
    case Method::Series: return "Series";
    case Method::Asymptotic: return "Asymptotic(" + std::to_string(detail) + ")";
    case Method::Continuation: return "Continuation(" + std::to_string(detail) + ")";
    case Method::Polynomial: return "Polynomial";
    case Method::MuMean: return "MuMean";
    case Method::Quadrature: return "Quadrature";
    }
    return "Unknown";
}

BesselPair continue_pair(Complex nu, const BesselPair& at, int m) {
    if (m == 0) return at;
    Complex ej = std::exp(-double(m) * nu * pi * I);
    Complex ey = std::exp(double(m) * nu * pi * I);
    Complex mix = -2.0 * I * chebyshev_u(m, nu) * cos_pi(nu);
    BesselPair r = at;
    r.J = ej * at.J;
    r.err_J = std::abs(ej) * at.err_J;
    r.Y = ey * at.Y + mix * at.J;
    r.err_Y = std::abs(ey) * at.err_Y + std::abs(mix) * at.err_J + 4.0 * eps * std::abs(r.Y);
    r.method = Method::Continuation;
    r.detail = m;
    return r;
}

BesselPair bessel_pair(Complex nu, const BranchPoint& z) {
    check_point(z);
    BranchSplit s = split_branch(z);
    return continue_pair(nu, to_pair(full_principal(nu, s.principal)), s.m);
}

HankelPair hankel_pair(Complex nu, const BranchPoint& z) {
    check_point(z);
    BranchSplit s = split_branch(z);
    Full f = full_principal(nu, s.principal);
    HankelPair r{f.h1, f.h2, f.e1, f.e2, f.method, f.detail};
    if (s.m == 0) return r;
    // z = zp e^{k pi i} with k = -m
    int k = -s.m;
    Complex ep = std::exp(nu * pi * I), em = std::exp(-nu * pi * I);
    Complex u_km1 = chebyshev_u(k - 1, nu), u_k = chebyshev_u(k, nu), u_kp1 = chebyshev_u(k + 1, nu);
    r.h1 = -u_km1 * f.h1 - em * u_k * f.h2;
    r.h2 = u_kp1 * f.h2 + ep * u_k * f.h1;
    r.err1 = std::abs(u_km1) * f.e1 + std::abs(em * u_k) * f.e2 + 4.0 * eps * std::abs(r.h1);
    r.err2 = std::abs(u_kp1) * f.e2 + std::abs(ep * u_k) * f.e1 + 4.0 * eps * std::abs(r.h2);
    r.method = Method::Continuation;
    r.detail = s.m;
    return r;
}

BesselPairDerivative bessel_pair_derivative(Complex nu, const BranchPoint& z) {
    BesselPairDerivative r;
    r.value = bessel_pair(nu, z);
    BesselPair lower = bessel_pair(nu - 1.0, z);
    Complex q = nu / z.value();
    r.dJ = lower.J - q * r.value.J;
    r.dY = lower.Y - q * r.value.Y;
    r.err_dJ = lower.err_J + std::abs(q) * r.value.err_J;
    r.err_dY = lower.err_Y + std::abs(q) * r.value.err_Y;
    return r;
}

namespace {
EvalResult from_pair(const BesselPair& p, Complex v, double err) {
    return {v, err, p.method, p.detail};
}
} // namespace

EvalResult bessel_j(Complex nu, const BranchPoint& z) {
    BesselPair p = bessel_pair(nu, z);
    return from_pair(p, p.J, p.err_J);
}

EvalResult bessel_y(Complex nu, const BranchPoint& z) {
    BesselPair p = bessel_pair(nu, z);
    return from_pair(p, p.Y, p.err_Y);
}

EvalResult hankel(int kind, Complex nu, const BranchPoint& z) {
    if (kind != 1 && kind != 2) throw ParamError("hankel: kind must be 1 or 2");
    HankelPair h = hankel_pair(nu, z);
    if (kind == 1) return {h.h1, h.err1, h.method, h.detail};
    return {h.h2, h.err2, h.method, h.detail};
}

EvalResult hankel_asymptotic(int kind, Complex nu, const BranchPoint& z, int p) {
    if (kind != 1 && kind != 2) throw ParamError("hankel_asymptotic: kind must be 1 or 2");
    if (p < 1) throw ParamError("hankel_asymptotic: p must be positive");
    bool inside = kind == 1 ? (z.arg > -pi && z.arg < 2.0 * pi) : (z.arg > -2.0 * pi && z.arg < pi);
    if (!inside) throw SectorError("hankel_asymptotic: argument outside the validity sector");
    if (z.modulus < 10.0) throw AccuracyError("hankel_asymptotic: modulus below 10");
    AsymSum s = hankel_expansion(kind, nu, z, p);
    if (s.past_optimal) throw AccuracyError("hankel_asymptotic: requested p passes the smallest term");
    return {s.value, s.err, Method::Asymptotic, s.terms};
}

} // namespace lommelq
