#include "lommelq/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lommelq/errors.hpp"
#include "lommelq/quadrature.hpp"

namespace lommelq {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_g(const AuxParams& p) {
    if (std::abs(0.5 - p.mu) < 1e-12) throw ParamError("mu must differ from 1/2 for the auxiliary function g");
}

double point_segment_distance(Complex p, Complex a, Complex b) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

Contour rectangle(double x0, double x1, double y0, double y1) {
    Contour c;
    c.segments = {Segment::line({x0, y0}, {x1, y0}), Segment::line({x1, y0}, {x1, y1}),
                  Segment::line({x1, y1}, {x0, y1}), Segment::line({x0, y1}, {x0, y0})};
    return c;
}

} // namespace

// 1/2 - mu without a negative zero, so real mu > 1/2 has argument pi.
static Complex half_minus(Complex mu) {
    return {0.5 - mu.real(), mu.imag() == 0.0 ? 0.0 : -mu.imag()};
}

AuxParams make_aux_params(Complex C_hat, Complex sigma_hat, Complex mu, Complex D_hat) {
    if (std::abs(C_hat) == 0.0) throw ParamError("the exponential coefficient C must be non-zero");
    if (!finite(C_hat) || !finite(sigma_hat) || !finite(mu) || !finite(D_hat))
        throw ParamError("auxiliary parameters must be finite");
    AuxParams p;
    p.C_hat = C_hat;
    p.D_hat = D_hat;
    p.sigma_hat = sigma_hat;
    p.mu = mu;
    Complex c = half_minus(mu);
    p.b = std::abs(c);
    p.phi = std::arg(c);
    if (p.phi <= -pi) p.phi = pi;
    return p;
}

Complex aux_g(const AuxParams& p, const BranchPoint& z) {
    require_g(p);
    return p.C_hat * std::exp(I * z.value()) + p.sigma_hat * z.pow(p.mu - 0.5);
}

Complex aux_g_derivative(const AuxParams& p, const BranchPoint& z) {
    require_g(p);
    return I * p.C_hat * std::exp(I * z.value()) + (p.mu - 0.5) * p.sigma_hat * z.pow(p.mu - 1.5);
}

Complex aux_ghat(const AuxParams& p, Complex z) {
    return p.C_hat * std::exp(I * z) + p.D_hat * std::exp(-I * z) + p.sigma_hat;
}

Complex aux_ghat_derivative(const AuxParams& p, Complex z) {
    return I * p.C_hat * std::exp(I * z) - I * p.D_hat * std::exp(-I * z);
}

WrightTarget g_to_wright(const AuxParams& p) {
    require_g(p);
    if (std::abs(p.sigma_hat) == 0.0) throw ParamError("sigma must be non-zero for the Wright reduction");
    Complex c = half_minus(p.mu);
    Complex w = -p.sigma_hat / p.C_hat;
    Complex a = (I / c) * std::exp(std::log(w) / c);
    return make_wright_target(a);
}

BranchPoint wright_zero_to_zeta(const AuxParams& p, Complex z) {
    require_g(p);
    Complex c = half_minus(p.mu);
    Complex w = -p.sigma_hat / p.C_hat;
    Complex La = I * (pi / 2.0) - std::log(c) + std::log(w) / c;
    WrightTarget t = g_to_wright(p);
    double j = std::round((La.imag() - t.alpha) / (2.0 * pi));
    Complex log_a{std::log(t.A), t.alpha};
    double n = std::round((std::log(z) + z - log_a).imag() / (2.0 * pi));
    double arg = p.phi + std::arg(z) - pi / 2.0 - 2.0 * pi * (n - j);
    return {p.b * std::abs(z), arg};
}

Segment Segment::line(Complex from, Complex to) {
    Segment s;
    s.kind = SegmentKind::Line;
    s.a = from;
    s.b = to;
    return s;
}

Segment Segment::log_curve(double scale, double m, double alpha, double coef, double r_from, double r_to) {
    Segment s;
    s.kind = SegmentKind::LogCurve;
    s.scale = scale;
    s.m = m;
    s.alpha = alpha;
    s.coef = coef;
    s.r0 = r_from;
    s.r1 = r_to;
    return s;
}

Segment Segment::arc(Complex centre, double radius, double angle_from, double sweep) {
    Segment s;
    s.kind = SegmentKind::Arc;
    s.a = centre;
    s.r0 = radius;
    s.r1 = angle_from;
    s.coef = sweep;
    return s;
}

Complex Segment::point(double t) const {
    switch (kind) {
    case SegmentKind::Line:
        return a + t * (b - a);
    case SegmentKind::LogCurve: {
        double r = r0 + t * (r1 - r0);
        double d = 2.0 * m * pi * r * r - alpha - pi;
        return scale * Complex(d, -coef * std::log(r));
    }
    case SegmentKind::Arc:
        return a + std::polar(r0, r1 + t * coef);
    }
    return {};
}

Complex Segment::derivative(double t) const {
    switch (kind) {
    case SegmentKind::Line:
        return b - a;
    case SegmentKind::LogCurve: {
        double r = r0 + t * (r1 - r0);
        return scale * Complex(4.0 * m * pi * r, -coef / r) * (r1 - r0);
    }
    case SegmentKind::Arc:
        return I * std::polar(r0, r1 + t * coef) * coef;
    }
    return {};
}

std::string Segment::kind_name() const {
    switch (kind) {
    case SegmentKind::Line: return "line";
    case SegmentKind::LogCurve: return "log-curve";
    case SegmentKind::Arc: return "arc";
    }
    return "line";
}

Complex Contour::point(std::size_t seg, double t) const {
    return std::polar(1.0, rotation) * segments.at(seg).point(t);
}

Complex Contour::derivative(std::size_t seg, double t) const {
    return std::polar(1.0, rotation) * segments.at(seg).derivative(t);
}

BranchPoint Contour::branch_point(std::size_t seg, double t) const {
    Complex base = segments.at(seg).point(t);
    return {std::abs(base), std::arg(base) + rotation};
}

std::vector<Complex> Contour::polyline(int per_segment) const {
    int n = per_segment > 0 ? per_segment : samples_per_segment;
    std::vector<Complex> out;
    out.reserve(segments.size() * n + 1);
    for (std::size_t s = 0; s < segments.size(); ++s)
        for (int i = 0; i < n; ++i) out.push_back(point(s, static_cast<double>(i) / n));
    if (!out.empty()) out.push_back(out.front());
    return out;
}

double Contour::closure_defect() const {
    double worst = 0.0;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        std::size_t next = (s + 1) % segments.size();
        worst = std::max(worst, std::abs(point(s, 1.0) - point(next, 0.0)));
    }
    return worst;
}

double Contour::winding_about(Complex p, int per_segment) const {
    auto pts = polyline(per_segment);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += std::arg((pts[i + 1] - p) / (pts[i] - p));
    return total / (2.0 * pi);
}

bool Contour::contains(Complex p, int per_segment) const {
    return std::abs(winding_about(p, per_segment)) > 0.5;
}

double Contour::distance_to(Complex p, int per_segment) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < segments.size(); ++s) {
        int n = segments[s].kind == SegmentKind::Line ? 1 : per_segment;
        Complex prev = point(s, 0.0);
        for (int i = 1; i <= n; ++i) {
            Complex cur = point(s, static_cast<double>(i) / n);
            best = std::min(best, point_segment_distance(p, prev, cur));
            prev = cur;
        }
    }
    return best;
}

Contour build_square_contour(Complex centre, double h) {
    if (!(h > 0.0)) throw ParamError("square half-width must be positive");
    return rectangle(centre.real() - h, centre.real() + h, centre.imag() - h, centre.imag() + h);
}

Contour build_circle_contour(Complex centre, double radius) {
    if (!(radius > 0.0)) throw ParamError("circle radius must be positive");
    Contour c;
    c.segments = {Segment::arc(centre, radius, -pi, 2.0 * pi)};
    return c;
}

bool dominance_holds(const AuxParams& p, long m) {
    double lhs = std::pow(p.b * m * pi, std::abs(p.mu.real() - 0.5)) * std::abs(p.sigma_hat);
    double rhs = 2.0 * std::abs(p.C_hat) * std::exp(std::abs(p.mu.imag()) * pi);
    return lhs > rhs;
}

long smallest_admissible_m(const AuxParams& p, long limit) {
    WrightTarget t = g_to_wright(p);
    for (long m = 1; m <= limit; ++m)
        if (subseq_hypothesis(t, m) && dominance_holds(p, m)) return m;
    return -1;
}

Contour build_contour_omega_g(const AuxParams& p, long m, long k) {
    WrightTarget t = g_to_wright(p);
    if (k < 2) throw HypothesisError("contour index k must be at least 2");
    if (!subseq_hypothesis(t, m) || !dominance_holds(p, m)) {
        long best = smallest_admissible_m(p);
        std::string hint = best > 0 ? "smallest admissible m is " + std::to_string(best) : "no admissible m found";
        throw HypothesisError("m = " + std::to_string(m) + " fails the subsequence or dominance hypothesis; " + hint);
    }
    double b = p.b, a = t.alpha, mm = static_cast<double>(m);
    double k1 = static_cast<double>(k), k2 = 2.0 * k1;
    auto d = [&](double r) { return 2.0 * mm * pi * r * r - a - pi; };
    Contour c;
    c.segments = {
        Segment::log_curve(b, mm, a, 6.0, k1, k2),
        Segment::line(b * Complex(d(k2), -6.0 * std::log(k2)), b * Complex(d(k2), -2.0 * std::log(k2))),
        Segment::log_curve(b, mm, a, 2.0, k2, k1),
        Segment::line(b * Complex(d(k1), -2.0 * std::log(k1)), b * Complex(d(k1), -6.0 * std::log(k1))),
    };
    c.rotation = p.phi - pi;
    c.samples_per_segment = static_cast<int>(std::max<long>(64, 16 * k));
    return c;
}

std::vector<Rect> omega_g_rectangles(const AuxParams& p, long m, long k) {
    WrightTarget t = g_to_wright(p);
    double b = p.b;
    std::vector<Rect> out;
    for (long j = 0; j < k; ++j) {
        double r = static_cast<double>(k + j);
        out.push_back({b * subseq_d(t, m, r), b * subseq_d(t, m, r + 1.0), -5.0 * b * std::log(r),
                       -2.0 * b * std::log(r) - 2.0 * b});
    }
    return out;
}

GhatZeroData ghat_zero_data(const AuxParams& p) {
    GhatZeroData z;
    if (std::abs(p.D_hat) == 0.0) {
        if (std::abs(p.sigma_hat) == 0.0) throw DegenerateQuadratic("the quadratic in e^{i zeta} has a zero root");
        z.has_D = false;
        z.Delta_zero_inv = -p.sigma_hat / p.C_hat;
        z.theta_zero = std::arg(z.Delta_zero_inv);
        z.d = 1.0;
        return z;
    }
    z.has_D = true;
    Complex s = std::sqrt(p.sigma_hat * p.sigma_hat - 4.0 * p.C_hat * p.D_hat);
    Complex qp = -p.sigma_hat + s, qm = -p.sigma_hat - s;
    Complex product = p.D_hat / p.C_hat;
    if (std::abs(qp) >= std::abs(qm)) {
        z.Delta_plus_inv = qp / (2.0 * p.C_hat);
        z.Delta_minus_inv = product / z.Delta_plus_inv;
    } else {
        z.Delta_minus_inv = qm / (2.0 * p.C_hat);
        z.Delta_plus_inv = product / z.Delta_minus_inv;
    }
    if (std::abs(z.Delta_plus_inv) == 0.0 || std::abs(z.Delta_minus_inv) == 0.0)
        throw DegenerateQuadratic("the quadratic in e^{i zeta} has a zero root");
    z.theta_plus = std::arg(z.Delta_plus_inv);
    z.theta_minus = std::arg(z.Delta_minus_inv);
    double gap = std::abs(std::log(std::abs(z.Delta_plus_inv)) - std::log(std::abs(z.Delta_minus_inv)));
    z.equal_moduli = gap < 1e-12;
    z.d = z.equal_moduli ? 1.0 : gap;
    return z;
}

std::vector<GhatZero> ghat_zeros(const AuxParams& p, long k_lo, long k_hi) {
    GhatZeroData z = ghat_zero_data(p);
    std::vector<GhatZero> out;
    auto push = [&](long k, char fam, Complex inv, double theta) {
        Complex zeta{2.0 * k * pi + theta, 0.0 - std::log(std::abs(inv))};
        out.push_back({k, fam, zeta, std::abs(aux_ghat(p, zeta))});
    };
    for (long k = k_lo; k <= k_hi; ++k) {
        if (z.has_D) {
            push(k, '+', z.Delta_plus_inv, z.theta_plus);
            push(k, '-', z.Delta_minus_inv, z.theta_minus);
        } else {
            push(k, '0', z.Delta_zero_inv, z.theta_zero);
        }
    }
    return out;
}

Contour build_contour_omega_ghat(const AuxParams& p, long k, bool modified) {
    if (k < 1) throw HypothesisError("contour index k must be positive");
    GhatZeroData z = ghat_zero_data(p);
    if (z.has_D && z.equal_moduli && !modified && std::abs(z.theta_plus - z.theta_minus) > 1e-12)
        throw HypothesisError("equal root moduli with distinct arguments need the modified contour");
    if (modified && !z.has_D) throw HypothesisError("the modified contour needs two root families");
    Complex inv = z.has_D ? z.Delta_plus_inv : z.Delta_zero_inv;
    double theta = z.has_D ? z.theta_plus : z.theta_zero;
    double level = -std::log(std::abs(inv));
    double x0, x1;
    if (modified) {
        double shift = 0.5 * (z.theta_plus - z.theta_minus);
        x0 = 2.0 * k * pi - shift + theta;
        x1 = 4.0 * k * pi - shift + theta;
    } else {
        x0 = (2.0 * k - 1.0) * pi + theta;
        x1 = (4.0 * k + 1.0) * pi + theta;
    }
    auto zeros = ghat_zeros(p, k - 2, 2 * k + 2);
    double d = z.d;
    for (int attempt = 0; attempt < 2; ++attempt) {
        Contour c = rectangle(x0, x1, level - 0.5 * d, level + 0.5 * d);
        c.samples_per_segment = static_cast<int>(std::max<long>(64, 32 * k));
        bool clear = std::all_of(zeros.begin(), zeros.end(),
                                 [&](const GhatZero& g) { return c.distance_to(g.zeta) > 1e-9; });
        if (clear) return c;
        d *= 1.01;
    }
    throw ZeroOnContour("a closed-form zero lies on the contour");
}

CountResult count_zeros(const AnalyticFn& f, const Contour& c, const CountOptions& opt) {
    if (c.segments.empty()) throw ParamError("empty contour");
    CountResult out;
    double min_abs = std::numeric_limits<double>::infinity();
    double min_dist = std::numeric_limits<double>::infinity();
    long used = 0;
    auto integrand_for = [&](std::size_t s) {
        return [&, s](double t) -> Complex {
            auto [v, dv] = f(c.branch_point(s, t));
            if (!finite(v) || !finite(dv)) throw QuadratureError("non-finite value on the contour");
            double av = std::abs(v);
            min_abs = std::min(min_abs, av);
            double adv = std::abs(dv);
            if (adv > 0.0) min_dist = std::min(min_dist, av / adv);
            if (av == 0.0 || min_dist < opt.zero_distance)
                throw ZeroOnContour("a zero lies within the exclusion distance of the contour");
            return dv / v * c.derivative(s, t);
        };
    };
    Complex prev{std::numeric_limits<double>::quiet_NaN(), 0.0};
    int pieces = std::max(1, opt.initial_pieces);
    double tol = 1e-9;
    for (;;) {
        Complex total = 0.0;
        long pass_total = static_cast<long>(c.segments.size()) * pieces;
        for (std::size_t s = 0; s < c.segments.size(); ++s) {
            auto h = integrand_for(s);
            for (int i = 0; i < pieces; ++i) {
                long budget = opt.max_samples - used;
                if (budget <= 0) throw QuadratureError("argument-principle quadrature exceeded its sample budget");
                auto r = integrate_adaptive(h, static_cast<double>(i) / pieces, static_cast<double>(i + 1) / pieces,
                                            tol * 2.0 * pi / pass_total, budget, opt.rel_noise);
                used += r.evaluations;
                total += r.value;
            }
        }
        if (min_dist < opt.zero_distance) throw ZeroOnContour("a zero lies within the exclusion distance of the contour");
        Complex raw = total / (2.0 * pi * I);
        double nearest = std::round(raw.real());
        bool integral = std::abs(raw.real() - nearest) <= opt.integer_tol && std::abs(raw.imag()) <= opt.integer_tol;
        bool stable = std::abs(raw - prev) <= opt.stable_tol;
        if (integral && stable) {
            out.winding = static_cast<long>(nearest);
            out.raw_winding = raw.real();
            out.min_abs_on_contour = min_abs;
            out.samples = used;
            return out;
        }
        if (used >= opt.max_samples)
            throw QuadratureError("argument-principle quadrature exceeded its sample budget");
        prev = raw;
        pieces *= 2;
        tol = std::max(0.25 * tol, 1e-12);
    }
}

double rouche_margin(const ValueFn& f, const ValueFn& g, const Contour& c, int samples_per_segment) {
    auto margin = [&](std::size_t s, double t) {
        BranchPoint z = c.branch_point(s, t);
        Complex gv = g(z);
        return std::abs(gv) - std::abs(f(z) - gv);
    };
    struct Sample {
        double value;
        std::size_t seg;
        int index;
    };
    std::vector<Sample> samples;
    int n = std::max(8, samples_per_segment);
    for (std::size_t s = 0; s < c.segments.size(); ++s)
        for (int i = 0; i <= n; ++i) samples.push_back({margin(s, static_cast<double>(i) / n), s, i});
    std::sort(samples.begin(), samples.end(), [](const Sample& x, const Sample& y) { return x.value < y.value; });
    double best = samples.front().value;
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    std::size_t refine = std::min<std::size_t>(8, samples.size());
    for (std::size_t r = 0; r < refine; ++r) {
        double lo = std::max(0, samples[r].index - 1) / static_cast<double>(n);
        double hi = std::min(n, samples[r].index + 1) / static_cast<double>(n);
        std::size_t s = samples[r].seg;
        double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
        double f1 = margin(s, x1), f2 = margin(s, x2);
        for (int it = 0; it < 40; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - golden * (hi - lo);
                f1 = margin(s, x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + golden * (hi - lo);
                f2 = margin(s, x2);
            }
        }
        best = std::min({best, f1, f2});
    }
    return best;
}

} // namespace lommelq
