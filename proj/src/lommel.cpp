#include "lommelq/lommel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "lommelq/errors.hpp"
#include "lommelq/quadrature.hpp"

namespace lommelq {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr Complex I(0.0, 1.0);

constexpr int max_p = 64;
constexpr double near_singular = 1e-8;
constexpr double asym_switch = 12.0;
constexpr double series_limit = 30.0;

std::optional<int> odd_index(Complex x, double tol) {
    double p = std::round((x.real() - 1.0) / 2.0);
    if (p < 0.0 || p > max_p) return std::nullopt;
    if (std::abs(x - Complex(2.0 * p + 1.0)) <= tol) return static_cast<int>(p);
    return std::nullopt;
}

std::optional<int> nonpositive_integer(Complex x, double tol) {
    double n = std::round(-x.real());
    if (n < 0.0) return std::nullopt;
    if (std::abs(x + n) <= tol) return static_cast<int>(n);
    return std::nullopt;
}

Complex power_of_two(Complex a) { return std::exp(a * std::log(2.0)); }

double sign_pow(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

// Distance of mu from the set where the series denominators or the Gamma
// factors of the Bessel part break down.
double series_singularity_distance(Complex mu, Complex nu) {
    double a = distance_to_pole(0.5 * (mu + nu + 1.0));
    double b = distance_to_pole(0.5 * (mu - nu + 1.0));
    return 2.0 * std::min(a, b);
}

EvalResult series_with_pair(Complex mu, Complex nu, const BranchPoint& z, const BesselPair& jy) {
    Complex zv = z.value();
    Complex x = -zv * zv;
    Complex a1 = mu + 1.0;
    Complex den = a1 * a1 - nu * nu;
    if (std::abs(den) < 1e-12) throw PoleError("lommel series: vanishing denominator");
    Complex t = 1.0 / den, sum = t;
    double biggest = std::abs(t);
    int k = 1;
    for (; k < 4000; ++k) {
        Complex a = mu + double(2 * k + 1);
        den = a * a - nu * nu;
        if (std::abs(den) < 1e-12) throw PoleError("lommel series: vanishing denominator");
        t *= x / den;
        sum += t;
        biggest = std::max(biggest, std::abs(t));
        if (k > 0.5 * z.modulus && std::abs(t) <= 1e-17 * std::abs(sum)) break;
    }
    if (k >= 4000) throw ConvergenceError("lommel series did not converge");
    Complex pre = z.pow(mu + 1.0);
    Complex s = pre * sum;
    double err = 4.0 * eps * biggest * std::sqrt(double(k)) * std::abs(pre);

    Complex chi_p = 0.5 * (mu + nu + 1.0), chi_m = 0.5 * (mu - nu + 1.0);
    if (distance_to_pole(chi_p) < 1e-12 || distance_to_pole(chi_m) < 1e-12)
        throw PoleError("lommel series: Gamma factor at a pole");
    Complex K = power_of_two(mu - 1.0) * gamma_complex(chi_p) * gamma_complex(chi_m);
    Complex sn = sin_pi(0.5 * (mu - nu)), cs = cos_pi(0.5 * (mu - nu));
    Complex v = s + K * (sn * jy.J - cs * jy.Y);
    err += std::abs(K) * (std::abs(sn) * jy.err_J + std::abs(cs) * jy.err_Y) + 4.0 * eps * std::abs(v);
    return {v, err, Method::Series, 0};
}

double choose_mean_radius(Complex mu, Complex nu) {
    double best_r = 0.5, best_gap = -1.0;
    for (int i = 0; i <= 50; ++i) {
        double r = 0.25 + 0.01 * i;
        double gap = std::numeric_limits<double>::infinity();
        for (double s : {1.0, -1.0}) {
            Complex base = s * nu + 1.0;   // singular points base - 2j, j >= 1
            double jc = std::round((base - mu).real() / 2.0);
            for (double j = std::max(1.0, jc - 2.0); j <= std::max(1.0, jc + 2.0); j += 1.0) {
                double dist = std::abs(mu - (base - 2.0 * j));
                gap = std::min(gap, std::abs(dist - r));
            }
        }
        if (gap > best_gap) {
            best_gap = gap;
            best_r = r;
        }
    }
    return best_r;
}

EvalResult mu_mean_with_pair(Complex mu, Complex nu, const BranchPoint& z, const BesselPair& jy, int nodes) {
    double r = choose_mean_radius(mu, nu);
    Complex sum = 0.0;
    double err = 0.0, biggest = 0.0;
    for (int j = 0; j < nodes; ++j) {
        Complex node = mu + r * std::exp(I * (2.0 * pi * (j + 0.5) / nodes));
        EvalResult e = series_with_pair(node, nu, z, jy);
        sum += e.value;
        err += e.abs_err_est;
        biggest = std::max(biggest, std::abs(e.value));
    }
    return {sum / double(nodes), err / nodes + 4.0 * eps * biggest, Method::MuMean, nodes};
}

EvalResult small_modulus(const LommelParams& prm, const BranchPoint& z) {
    BesselPair jy = bessel_pair(prm.nu, z);
    if (series_singularity_distance(prm.mu, prm.nu) < near_singular) return mu_mean_with_pair(prm.mu, prm.nu, z, jy, 48);
    return series_with_pair(prm.mu, prm.nu, z, jy);
}

EvalResult asymptotic_optimal(const LommelParams& prm, const BranchPoint& z) {
    Complex zv = z.value();
    Complex w = 1.0 / (zv * zv);
    Complex term = 1.0, sum = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    int k = 0;
    for (; k < 400; ++k) {
        double mag = std::abs(term);
        if (mag > prev || mag <= 1e-17 * std::abs(sum)) break;
        sum += term;
        prev = mag;
        Complex a = prm.mu - double(2 * k + 1);
        term *= -(a * a - prm.nu * prm.nu) * w;
        if (term == Complex(0.0)) {
            ++k;
            break;
        }
    }
    Complex pre = z.pow(prm.mu - 1.0);
    double err = std::abs(pre) * (std::abs(term) + eps * (4.0 + z.modulus) * std::abs(sum));
    return {pre * sum, err, Method::Asymptotic, k};
}

double rel(const EvalResult& e) { return e.abs_err_est / std::max(std::abs(e.value), 1e-300); }

EvalResult continued_impl(const LommelParams& prm, const DegeneracyClass& d, const BranchPoint& zp, int m,
                          const EvalResult& base);

EvalResult general_principal(const LommelParams& prm, const DegeneracyClass& d, const BranchPoint& z) {
    if (z.modulus < asym_switch) return small_modulus(prm, z);
    EvalResult a;
    if (std::abs(z.arg) <= 0.5 * pi) {
        a = asymptotic_optimal(prm, z);
    } else {
        // the expansion loses uniformity toward the negative axis; come from the right half-plane
        int m = z.arg > 0 ? -1 : 1;
        BranchPoint zr = z.rotated(m * pi);
        EvalResult base = general_principal(prm, d, zr);
        a = continued_impl(prm, d, zr, m, base);
        a.method = Method::Asymptotic;
    }
    if (rel(a) <= 1e-13 || z.modulus > series_limit) return a;
    EvalResult s = small_modulus(prm, z);
    return rel(s) < rel(a) ? s : a;
}

EvalResult principal_impl(const LommelParams& prm, const DegeneracyClass& d, const BranchPoint& z) {
    if (d.terminating()) {
        DegeneratePoly poly = lommel_degenerate_poly(prm);
        Complex v = poly(z);
        Complex w = 1.0 / (z.value() * z.value());
        double mag = 0.0;
        Complex wk = 1.0;
        for (const auto& c : poly.poly.coeffs) {
            mag += std::abs(c * wk);
            wk *= w;
        }
        return {v, 4.0 * eps * mag * std::abs(z.pow(poly.exponent)), Method::Polynomial, poly.p};
    }
    EvalResult a = general_principal(prm, d, z);
    if (rel(a) <= 1e-13 || prm.nu == Complex(0.0)) return a;
    // S is even in nu; the two signs cancel differently
    LommelParams flipped{prm.mu, -prm.nu};
    EvalResult b = general_principal(flipped, classify_degeneracy(flipped), z);
    return rel(b) < rel(a) ? b : a;
}


Complex kp(int sgn, Complex nu, int m) {
    Complex u = chebyshev_u(m, nu);
    return pi * power_of_two(nu - 2.0) * I * std::exp(-double(m) * nu * pi * I) * gamma_complex(nu) *
           (u * std::exp(double(m + sgn) * nu * pi * I) - double(m));
}

double kpp(int sgn, int m) { return -double(m) * pi * pi * double(m + sgn) / 4.0; }

RationalPoly odd_part(const RationalPoly& p) {
    std::vector<Rational> c = p.coeffs;
    for (std::size_t k = 0; k < c.size(); k += 2) c[k] = 0;
    return RationalPoly(std::move(c));
}

EvalResult continued_impl(const LommelParams& prm, const DegeneracyClass& d, const BranchPoint& zp, int m,
                          const EvalResult& base) {
    if (m == 0) return base;
    Complex mu = prm.mu, nu = prm.nu;
    EvalResult out{0.0, 0.0, Method::Continuation, m};

    if (d.terminating()) {
        Complex f = sign_pow(std::abs(m)) * std::exp(-double(m) * mu * pi * I);
        out.value = f * base.value;
        out.abs_err_est = std::abs(f) * base.abs_err_est;
        return out;
    }

    if (d.tag == DegeneracyTag::Generic) {
        KConstants kc = k_constants(prm, m);
        Complex pm = continuation_coeff_P(m, prm);
        Complex pm1 = continuation_coeff_P(m - 1, prm);
        HankelPair h = hankel_pair(nu, zp);
        Complex f = sign_pow(std::abs(m)) * std::exp(-double(m) * mu * pi * I);
        Complex e = std::exp(-nu * pi * I);
        Complex kplus = kc.K_plus.value_or(0.0);
        out.value = f * base.value + kplus * (pm * h.h1 + e * pm1 * h.h2);
        out.abs_err_est = std::abs(f) * base.abs_err_est + std::abs(kplus) * (std::abs(pm) * h.err1 + std::abs(e * pm1) * h.err2) +
                          4.0 * eps * std::abs(out.value);
        return out;
    }

    int p = d.p;
    switch (d.neg_case) {
    case NegativeCase::A: {
        Complex ne = d.nu_eff;
        HankelPair h = hankel_pair(ne, zp);
        Complex coef = sign_pow(p) / (std::pow(4.0, p) * factorial(p) * pochhammer(1.0 - ne, p));
        Complex a = kp(1, ne, m), b = kp(-1, ne, m);
        Complex f = std::exp(-double(m) * ne * pi * I);
        out.value = f * base.value + coef * (a * h.h1 + b * h.h2);
        out.abs_err_est = std::abs(f) * base.abs_err_est + std::abs(coef) * (std::abs(a) * h.err1 + std::abs(b) * h.err2) +
                          4.0 * eps * std::abs(out.value);
        return out;
    }
    case NegativeCase::B: {
        HankelPair h = hankel_pair(0.0, zp);
        double coef = sign_pow(p) / (std::pow(4.0, p) * factorial(p) * factorial(p));
        out.value = base.value + coef * (kpp(1, m) * h.h1 + kpp(-1, m) * h.h2);
        out.abs_err_est = base.abs_err_est + std::abs(coef) * (std::abs(kpp(1, m)) * h.err1 + std::abs(kpp(-1, m)) * h.err2);
        return out;
    }
    case NegativeCase::C: {
        int n = d.n;
        auto abc = abc_polys(n);
        double delta = (std::abs(m) % 2 == 1) ? 2.0 : 0.0;
        RationalPoly ah = odd_part(abc[0]), bh = odd_part(abc[1]), ch = odd_part(abc[2]);
        RationalPoly bb = abc[1] + Rational(-static_cast<int>(delta)) * bh;
        RationalPoly cb = abc[2] + Rational(-static_cast<int>(delta)) * ch;

        EvalResult s10, ds10;
        try {
            s10 = lommel_S_principal({-1.0, 0.0}, zp);
            EvalResult s21 = lommel_S_principal({-2.0, -1.0}, zp);
            ds10 = {-2.0 * s21.value, 2.0 * s21.abs_err_est, s21.method, 0};
        } catch (const Error& e) {
            throw UnsupportedCase(std::string("lommel continuation: S_{-1,0} unavailable: ") + e.what());
        }
        HankelPair h0 = hankel_pair(0.0, zp), h1 = hankel_pair(1.0, zp);
        Complex zv = zp.value();
        double pref = sign_pow(std::abs((m + 1) * n + p)) /
                      (std::pow(2.0, 2 * p + n) * factorial(n) * factorial(p) * factorial(p) *
                       pochhammer(Complex(1.0 + n), p).real());
        Complex k0 = kpp(1, m) * h0.h1 + kpp(-1, m) * h0.h2;
        Complex k1 = kpp(1, m) * h1.h1 + kpp(-1, m) * h1.h2;
        Complex brace = -delta * (ah(zv) + bh(zv) * s10.value + zv * ch(zv) * ds10.value) + bb(zv) * k0 -
                        zv * cb(zv) * k1;
        Complex zn = std::pow(zv, -n);
        double f = sign_pow(std::abs(m * n));
        out.value = f * base.value + pref * zn * brace;
        double k0err = std::abs(kpp(1, m)) * h0.err1 + std::abs(kpp(-1, m)) * h0.err2;
        double k1err = std::abs(kpp(1, m)) * h1.err1 + std::abs(kpp(-1, m)) * h1.err2;
        double brace_err = delta * (std::abs(bh(zv)) * s10.abs_err_est + std::abs(zv * ch(zv)) * ds10.abs_err_est) +
                           std::abs(bb(zv)) * k0err + std::abs(zv * cb(zv)) * k1err;
        out.abs_err_est = base.abs_err_est + std::abs(pref * zn) * brace_err + 4.0 * eps * std::abs(out.value);
        return out;
    }
    }
    return out;
}

} // namespace

std::string DegeneracyClass::to_string() const {
    switch (tag) {
    case DegeneracyTag::Generic: return "Generic";
    case DegeneracyTag::PlusOdd: return "PlusOdd(" + std::to_string(p) + ")";
    case DegeneracyTag::MinusOdd: return "MinusOdd(" + std::to_string(p) + ")";
    case DegeneracyTag::BothOdd: return "BothOdd(" + std::to_string(p_plus) + "," + std::to_string(p_minus) + ")";
    case DegeneracyTag::NegativeOdd: {
        const char* c = neg_case == NegativeCase::A ? "a" : neg_case == NegativeCase::B ? "b" : "c";
        std::string s = std::string("NegativeOdd(") + c + ",p=" + std::to_string(p);
        if (neg_case == NegativeCase::C) s += ",n=" + std::to_string(n);
        return s + ")";
    }
    }
    return "Unknown";
}

DegeneracyClass classify_degeneracy(const LommelParams& params, double tol) {
    if (!(tol > 0.0)) throw ParamError("classify_degeneracy: tol must be positive");
    DegeneracyClass d;
    Complex mu = params.mu, nu = params.nu;
    auto pp = odd_index(mu + nu, tol);
    auto pm = odd_index(mu - nu, tol);
    if (pp && pm) {
        d.tag = DegeneracyTag::BothOdd;
        d.p_plus = *pp;
        d.p_minus = *pm;
        d.p = std::min(*pp, *pm);
        return d;
    }
    if (pp) {
        d.tag = DegeneracyTag::PlusOdd;
        d.p = *pp;
        return d;
    }
    if (pm) {
        d.tag = DegeneracyTag::MinusOdd;
        d.p = *pm;
        return d;
    }

    int best_rank = 99;
    for (double s : {1.0, -1.0}) {
        Complex ne = s * nu;
        auto q = odd_index(-(mu - ne), tol);
        if (!q) continue;
        int rank = 3;
        DegeneracyClass c;
        c.tag = DegeneracyTag::NegativeOdd;
        c.p = *q;
        if (auto n = nonpositive_integer(ne, tol)) {
            if (*n >= 1) {
                rank = 0;
                c.neg_case = NegativeCase::C;
                c.n = *n;
                c.nu_eff = -double(*n);
            } else {
                rank = 1;
                c.neg_case = NegativeCase::B;
                c.nu_eff = 0.0;
            }
        } else {
            double k = std::round(ne.real());
            bool blocked = std::abs(ne - k) <= tol && k >= 1.0 && k <= *q;
            if (blocked) continue;
            rank = 2;
            c.neg_case = NegativeCase::A;
            c.nu_eff = ne;
        }
        if (rank < best_rank) {
            best_rank = rank;
            d = c;
        }
    }
    return d;
}

Complex DegeneratePoly::operator()(const BranchPoint& z) const {
    Complex zv = z.value();
    return z.pow(exponent) * poly(1.0 / (zv * zv));
}

DegeneratePoly lommel_degenerate_poly(const LommelParams& params) {
    DegeneracyClass d = classify_degeneracy(params);
    if (!d.terminating()) throw NotDegenerateError("lommel_degenerate_poly: mu +- nu is not a positive odd integer");
    std::vector<Complex> c;
    for (int k = 0; k <= d.p; ++k) c.push_back(sign_pow(k) * lommel_ck(params.mu, params.nu, k));
    DegeneratePoly out;
    out.exponent = params.mu - 1.0;
    out.poly = Poly(std::move(c));
    out.p = d.p;
    return out;
}

KConstants k_constants(const LommelParams& params, int m) {
    Complex mu = params.mu, nu = params.nu;
    KConstants kc;
    kc.m = m;
    Complex chi_p = 0.5 * (mu + nu + 1.0), chi_m = 0.5 * (mu - nu + 1.0);
    if (distance_to_pole(chi_p) >= 1e-12 && distance_to_pole(chi_m) >= 1e-12)
        kc.K = power_of_two(mu - 1.0) * gamma_complex(chi_p) * gamma_complex(chi_m);
    if (classify_degeneracy(params).terminating())
        kc.K_plus = Complex(0.0);
    else if (kc.K)
        kc.K_plus = *kc.K * I * (1.0 + std::exp((-mu + nu) * pi * I)) * cos_pi(0.5 * (mu + nu));
    if (distance_to_pole(nu) >= 1e-12) {
        kc.Kp_plus = kp(1, nu, m);
        kc.Kp_minus = kp(-1, nu, m);
    }
    kc.Kpp_plus = kpp(1, m);
    kc.Kpp_minus = kpp(-1, m);
    return kc;
}

Complex continuation_coeff_P(int m, const LommelParams& params) {
    Complex mu = params.mu, nu = params.nu;
    Complex den = (1.0 + std::exp(-(mu + nu) * pi * I)) * (1.0 + std::exp(-(mu - nu) * pi * I));
    if (std::abs(den) < 1e-12) throw DegenerateDenominator("continuation_coeff_P: mu +- nu at an odd integer");
    Complex num = chebyshev_u(m, nu) + std::exp(-mu * pi * I) * chebyshev_u(m + 1, nu) +
                  sign_pow(std::abs(m + 1)) * std::exp(-double(m + 1) * mu * pi * I);
    return num / den;
}

EvalResult lommel_S_principal(const LommelParams& params, const BranchPoint& z) {
    if (!z.is_principal()) throw BranchError("lommel_S_principal: argument outside (-pi, pi]");
    if (!(z.modulus > 0.0)) throw ParamError("lommel_S_principal: modulus must be positive");
    return principal_impl(params, classify_degeneracy(params), z);
}

EvalResult lommel_continued(const LommelParams& params, const BranchPoint& z_principal, int m) {
    if (!z_principal.is_principal()) throw BranchError("lommel_continued: base point must be on the principal sheet");
    DegeneracyClass d = classify_degeneracy(params);
    EvalResult base = principal_impl(params, d, z_principal);
    return continued_impl(params, d, z_principal, m, base);
}

EvalResult lommel_on_branch(const LommelParams& params, const BranchPoint& z) {
    BranchSplit s = split_branch(z);
    return lommel_continued(params, s.principal, s.m);
}

EvalResult lommel_derivative_on_branch(const LommelParams& params, const BranchPoint& z) {
    Complex c = params.mu + params.nu - 1.0;
    EvalResult out{0.0, 0.0, Method::Continuation, 0};
    if (c != Complex(0.0)) {
        EvalResult lower = lommel_on_branch({params.mu - 1.0, params.nu - 1.0}, z);
        out.value += c * lower.value;
        out.abs_err_est += std::abs(c) * lower.abs_err_est;
        out.method = lower.method;
        out.detail = lower.detail;
    }
    if (params.nu != Complex(0.0)) {
        EvalResult self = lommel_on_branch(params, z);
        Complex q = params.nu / z.value();
        out.value -= q * self.value;
        out.abs_err_est += std::abs(q) * self.abs_err_est;
    }
    return out;
}

EvalResult lommel_series(const LommelParams& params, const BranchPoint& z) {
    if (!(z.modulus > 0.0)) throw ParamError("lommel_series: modulus must be positive");
    return series_with_pair(params.mu, params.nu, z, bessel_pair(params.nu, z));
}

EvalResult lommel_mu_mean(const LommelParams& params, const BranchPoint& z, int nodes) {
    if (nodes < 8) throw ParamError("lommel_mu_mean: need at least 8 nodes");
    return mu_mean_with_pair(params.mu, params.nu, z, bessel_pair(params.nu, z), nodes);
}

EvalResult lommel_asymptotic(const LommelParams& params, const BranchPoint& z, int p) {
    if (p < 1) throw ParamError("lommel_asymptotic: p must be positive");
    if (!(z.arg > -pi && z.arg < pi)) throw BranchError("lommel_asymptotic: argument outside (-pi, pi)");
    Complex zv = z.value();
    Complex w = 1.0 / (zv * zv);
    Complex term = 1.0, sum = 0.0;
    for (int k = 0; k < p; ++k) {
        sum += term;
        Complex a = params.mu - double(2 * k + 1);
        term *= -(a * a - params.nu * params.nu) * w;
    }
    Complex pre = z.pow(params.mu - 1.0);
    return {pre * sum, std::abs(pre * term), Method::Asymptotic, p};
}

EvalResult lommel_S_quadrature(const LommelParams& params, const BranchPoint& z, double anchor_modulus) {
    if (!z.is_principal()) throw BranchError("lommel_S_quadrature: argument outside (-pi, pi]");
    if (!(anchor_modulus > 0.0)) throw ParamError("lommel_S_quadrature: anchor modulus must be positive");
    Complex mu = params.mu, nu = params.nu;
    BranchPoint z0(anchor_modulus, z.arg);
    Complex zeta0 = z0.value(), zeta = z.value();
    Complex step = zeta - zeta0;

    EvalResult s0 = lommel_S_principal(params, z0);
    EvalResult ds0 = lommel_derivative_on_branch(params, z0);
    BesselPairDerivative b0 = bessel_pair_derivative(nu, z0);
    Complex w0 = 2.0 / (pi * zeta0);
    Complex alpha = (s0.value * b0.dY - ds0.value * b0.value.Y) / w0;
    Complex beta = (b0.value.J * ds0.value - b0.dJ * s0.value) / w0;

    auto point = [&](double s) { return BranchPoint(anchor_modulus + s * (z.modulus - anchor_modulus), z.arg); };
    auto fj = [&](double s) {
        BranchPoint t = point(s);
        return t.pow(mu) * bessel_pair(nu, t).J * step;
    };
    auto fy = [&](double s) {
        BranchPoint t = point(s);
        return t.pow(mu) * bessel_pair(nu, t).Y * step;
    };
    const auto& gl = GaussLegendre16::get();
    double scale_j = std::abs(gl.apply(fj, 0.0, 1.0)) + 1e-300;
    double scale_y = std::abs(gl.apply(fy, 0.0, 1.0)) + 1e-300;
    AdaptiveResult ij = integrate_adaptive(fj, 0.0, 1.0, 1e-13 * scale_j);
    AdaptiveResult iy = integrate_adaptive(fy, 0.0, 1.0, 1e-13 * scale_y);

    BesselPair b = bessel_pair(nu, z);
    Complex v = alpha * b.J + beta * b.Y + 0.5 * pi * (b.Y * ij.value - b.J * iy.value);
    double err = std::abs(alpha) * b.err_J + std::abs(beta) * b.err_Y +
                 0.5 * pi * (std::abs(b.Y) * ij.err + std::abs(b.J) * iy.err) +
                 (s0.abs_err_est + ds0.abs_err_est) * (std::abs(b.J) + std::abs(b.Y)) / std::abs(w0) +
                 1e-13 * std::abs(v);
    return {v, err, Method::Quadrature, 0};
}

} // namespace lommelq
