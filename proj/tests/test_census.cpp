#include "doctest.h"
#include "test_util.hpp"

#include "lommelq/census.hpp"
#include "lommelq/errors.hpp"

using namespace lommelq;

namespace {

constexpr double pi = std::numbers::pi;
const Complex I{0.0, 1.0};

AnalyticFn g_fn(const AuxParams& p) {
    return [p](const BranchPoint& z) { return std::make_pair(aux_g(p, z), aux_g_derivative(p, z)); };
}

AnalyticFn ghat_fn(const AuxParams& p) {
    return [p](const BranchPoint& z) {
        Complex v = z.value();
        return std::make_pair(aux_ghat(p, v), aux_ghat_derivative(p, v));
    };
}

// g residual relative to the size of its power term
double g_rel_residual(const AuxParams& p, const BranchPoint& z) {
    return std::abs(aux_g(p, z)) / std::abs(p.sigma_hat * z.pow(p.mu - 0.5));
}

int inside_count(const Contour& c, const std::vector<GhatZero>& zs) {
    int n = 0;
    for (const auto& z : zs) n += c.contains(z.zeta) ? 1 : 0;
    return n;
}

} // namespace

TEST_CASE("auxiliary parameters") {
    auto p = make_aux_params(1.0, 1.0, 2.0);
    CHECK(p.b == doctest::Approx(1.5));
    CHECK(p.phi == doctest::Approx(pi));
    CHECK_THROWS_AS(make_aux_params(0.0, 1.0, 2.0), ParamError);
    auto half = make_aux_params(1.0, 1.0, 0.5);
    CHECK_THROWS_AS(aux_g(half, {1.0, 0.0}), ParamError);
    CHECK_THROWS_AS(g_to_wright(half), ParamError);
}

TEST_CASE("g at a constructed root and its derivative") {
    Complex mu(2.0, 0.3);
    BranchPoint z0{3.1, -0.4};
    Complex sigma = -std::exp(I * z0.value()) / z0.pow(mu - 0.5);
    auto p = make_aux_params(1.0, sigma, mu);
    CHECK(std::abs(aux_g(p, z0)) < 1e-14);
    BranchPoint z{2.2, 0.9};
    double h = 1e-6;
    auto shifted = [&](double dx) {
        Complex w = z.value() + dx;
        return aux_g(p, {std::abs(w), std::arg(w)});
    };
    Complex fd = (shifted(h) - shifted(-h)) / (2.0 * h);
    CHECK(lommelq::test::rel_err(aux_g_derivative(p, z), fd) < 1e-7);
    auto big = make_aux_params(1.0, 1.0, 2.0);
    BranchPoint far{400.0, 0.0};
    CHECK(std::abs(aux_g(big, far) - std::pow(400.0, 1.5)) < 1.0 + 1e-12 * std::pow(400.0, 1.5));
}

TEST_CASE("mapped Wright zeros are zeros of g") {
    for (auto p : {make_aux_params(1.0, 50.0, 2.0), make_aux_params(Complex(0.8, 0.3), Complex(-2.0, 1.0), Complex(1.7, 0.4)),
                   make_aux_params(1.0, 0.2, -0.5)}) {
        WrightTarget t = g_to_wright(p);
        int found = 0;
        for (long n = -40; n <= 40 && found < 10; ++n) {
            if (std::abs(n) < 10 || !wright_valid(t, n)) continue;
            auto zero = wright_refine(t, wright_seed(t, n));
            BranchPoint zeta = wright_zero_to_zeta(p, zero.z);
            CHECK(std::abs(zeta.value() - (0.5 - p.mu) * zero.z / I) < 1e-12 * std::abs(zeta.value()));
            CHECK(g_rel_residual(p, zeta) < 1e-8);
            ++found;
        }
        CHECK(found == 10);
    }
}

TEST_CASE("subsequence zeros for real mu above one half") {
    auto p = make_aux_params(1.0, 50.0, 2.0);
    WrightTarget t = g_to_wright(p);
    long m = smallest_admissible_m(p);
    REQUIRE(m == 1);
    double prev_arg = -INFINITY;
    for (long k = 3; k <= 30; ++k) {
        auto zero = wright_refine(t, wright_subseq_seed(t, m, k));
        BranchPoint zeta = wright_zero_to_zeta(p, zero.z);
        Complex v = zeta.value();
        CAPTURE(k);
        // the sheet argument grows like k^2, so compare on the scale of |v|
        CHECK(std::abs(v - p.b * Complex(-zero.z.imag(), zero.z.real())) <= 1e-11 * std::abs(v));
        CHECK(v.real() > 0.0);
        CHECK(v.imag() < 0.0);
        CHECK(std::arg(v) > prev_arg);
        prev_arg = std::arg(v);
        // the rectangle bounds are asymptotic in k
        if (k < 20) continue;
        auto rect = omega_g_rectangles(p, m, k).front();
        // rotation by pi - phi is the identity here
        CHECK(v.real() > rect.u_lo);
        CHECK(v.real() < rect.u_hi);
        CHECK(v.imag() > rect.v_lo);
        CHECK(v.imag() < rect.v_hi);
    }
}

TEST_CASE("contour for g: shape and hypotheses") {
    auto p = make_aux_params(1.0, 50.0, 2.0);
    CHECK_THROWS_AS(build_contour_omega_g(p, 1, 1), HypothesisError);
    auto weak = make_aux_params(1.0, 1.0, 2.0);
    try {
        build_contour_omega_g(weak, 1, 3);
        FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
        CHECK(std::string(e.what()).find("smallest admissible m is") != std::string::npos);
    }
    for (long k = 3; k <= 8; ++k) {
        auto c = build_contour_omega_g(p, 1, k);
        CHECK(c.closure_defect() <= 1e-12);
        WrightTarget t = g_to_wright(p);
        double dk = subseq_d(t, 1, double(k));
        Complex gamma1_start = p.b * Complex(dk, -2.0 * std::log(double(k))) * std::polar(1.0, c.rotation);
        CHECK(std::abs(c.point(2, 1.0) - gamma1_start) < 1e-9);
        CHECK(c.winding_about(c.point(0, 0.5) * 0.999 + c.point(2, 0.5) * 0.001) == doctest::Approx(1.0));
        // open rectangles; the outer ones share an edge with the contour
        for (const auto& r : omega_g_rectangles(p, 1, k)) {
            double eu = 1e-6 * (r.u_hi - r.u_lo), ev = 1e-6 * (r.v_hi - r.v_lo);
            for (Complex v : {Complex(r.u_lo + eu, r.v_lo + ev), Complex(r.u_hi - eu, r.v_lo + ev),
                              Complex(r.u_hi - eu, r.v_hi - ev), Complex(r.u_lo + eu, r.v_hi - ev)})
                CHECK(c.contains(v * std::polar(1.0, c.rotation), 2048));
        }
    }
}

TEST_CASE("argument principle on g") {
    auto p = make_aux_params(1.0, 50.0, 2.0);
    WrightTarget t = g_to_wright(p);
    for (long k = 3; k <= 5; ++k) {
        auto c = build_contour_omega_g(p, 1, k);
        auto res = count_zeros(g_fn(p), c);
        CHECK(res.winding >= k);
        CHECK(std::abs(res.raw_winding - res.winding) <= 1e-6);
        CHECK(res.min_abs_on_contour > 0.0);
        int mapped_inside = 0;
        for (long n = -1; n >= -20L * k * k; --n) {
            if (!wright_valid(t, n)) continue;
            BranchPoint z = wright_zero_to_zeta(p, wright_refine(t, wright_seed(t, n)).z);
            if (c.contains(z.value())) ++mapped_inside;
        }
        CHECK(mapped_inside >= k);
        CHECK(res.winding >= mapped_inside);
    }
}

TEST_CASE("closed-form zeros of ghat") {
    auto odd = make_aux_params(1.0, 1.0, 0.0);
    for (const auto& z : ghat_zeros(odd, -3, 3)) {
        CHECK(std::abs(z.zeta - Complex((2.0 * z.k + 1.0) * pi, 0.0)) < 1e-12);
        CHECK(z.family == '0');
        CHECK(z.residual <= 1e-12);
    }
    auto even = make_aux_params(1.0, -1.0, 0.0);
    for (const auto& z : ghat_zeros(even, -3, 3)) CHECK(std::abs(z.zeta - Complex(2.0 * z.k * pi, 0.0)) < 1e-12);
    CHECK_THROWS_AS(ghat_zero_data(make_aux_params(1.0, 0.0, 0.0)), DegenerateQuadratic);
}

TEST_CASE("ghat zeros have tiny residuals for random parameters") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        Complex C = lommelq::test::random_complex(rng, -2.0, 2.0);
        Complex D = i % 4 == 0 ? Complex(0.0) : lommelq::test::random_complex(rng, -2.0, 2.0);
        Complex s = lommelq::test::random_complex(rng, -3.0, 3.0);
        auto p = make_aux_params(C, s, 0.0, D);
        auto data = ghat_zero_data(p);
        CHECK(data.d > 0.0);
        for (const auto& z : ghat_zeros(p, 0, 3)) {
            double scale = std::abs(C * std::exp(I * z.zeta)) + std::abs(D * std::exp(-I * z.zeta)) + std::abs(s);
            CHECK(z.residual <= 1e-12 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("contour for ghat: unmodified count") {
    auto p = make_aux_params(1.0, 1.0, 0.0);
    auto c3 = build_contour_omega_ghat(p, 3, false);
    CHECK(c3.closure_defect() <= 1e-12);
    CHECK(count_zeros(ghat_fn(p), c3).winding == 4);
    auto pd = make_aux_params(1.0, Complex(2.5, 0.3), 0.0, Complex(0.7, -0.2));
    REQUIRE_FALSE(ghat_zero_data(pd).equal_moduli);
    for (long k = 2; k <= 6; ++k) {
        auto c = build_contour_omega_ghat(pd, k, false);
        auto zs = ghat_zeros(pd, -2, 3 * k);
        auto res = count_zeros(ghat_fn(pd), c);
        CHECK(res.winding == k + 1);
        CHECK(res.winding == inside_count(c, zs));
        int plus = 0;
        for (const auto& z : zs) {
            if (!c.contains(z.zeta)) continue;
            CHECK(z.family == '+');
            ++plus;
        }
        CHECK(plus == k + 1);
    }
}

TEST_CASE("contour for ghat: modified count matches the closed form") {
    Complex x1 = std::polar(1.3, 0.3), x2 = std::polar(1.3, 2.0);
    auto p = make_aux_params(1.0, -(x1 + x2), 0.0, x1 * x2);
    REQUIRE(ghat_zero_data(p).equal_moduli);
    CHECK_THROWS_AS(build_contour_omega_ghat(p, 3, false), HypothesisError);
    CHECK_THROWS_AS(build_contour_omega_ghat(make_aux_params(1.0, 1.0, 0.0), 3, true), HypothesisError);
    for (long k = 2; k <= 6; ++k) {
        auto c = build_contour_omega_ghat(p, k, true);
        auto res = count_zeros(ghat_fn(p), c);
        CHECK(res.winding == inside_count(c, ghat_zeros(p, -2, 3 * k)));
        CHECK(res.winding == 2 * k);
    }
}

TEST_CASE("argument principle basics") {
    auto unit = build_circle_contour(0.0, 1.0);
    CHECK(unit.closure_defect() < 1e-12);
    AnalyticFn ident = [](const BranchPoint& z) { return std::make_pair(z.value(), Complex(1.0)); };
    CHECK(count_zeros(ident, unit).winding == 1);
    AnalyticFn cubic = [](const BranchPoint& z) {
        Complex v = z.value(), a = 0.5, b = Complex(0, -0.3), c = 3.0;
        Complex f = (v - a) * (v - b) * (v - c);
        Complex df = (v - b) * (v - c) + (v - a) * (v - c) + (v - a) * (v - b);
        return std::make_pair(f, df);
    };
    CHECK(count_zeros(cubic, build_square_contour(0.0, 1.0)).winding == 2);
    CHECK(count_zeros(cubic, build_square_contour(0.0, 4.0)).winding == 3);
    CHECK(count_zeros(cubic, build_circle_contour(Complex(-2.0, 2.0), 0.1)).winding == 0);
    CHECK_THROWS_AS(count_zeros(cubic, build_square_contour(0.0, 0.5)), ZeroOnContour);
    AnalyticFn blowup = [](const BranchPoint&) { return std::make_pair(Complex(NAN, 0.0), Complex(1.0)); };
    CHECK_THROWS_AS(count_zeros(blowup, unit), QuadratureError);
}

TEST_CASE("contour geometry helpers") {
    auto sq = build_square_contour(Complex(1.0, 1.0), 2.0);
    auto poly = sq.polyline(8);
    CHECK(poly.front() == poly.back());
    CHECK(poly.size() == 33);
    CHECK(sq.contains(Complex(1.0, 1.0)));
    CHECK_FALSE(sq.contains(Complex(4.0, 1.0)));
    CHECK(sq.distance_to(Complex(1.0, 1.0)) == doctest::Approx(2.0));
    CHECK(sq.segments[0].kind_name() == "line");
    CHECK_THROWS_AS(build_square_contour(0.0, -1.0), ParamError);
}

TEST_CASE("Rouche margin") {
    auto p = make_aux_params(1.0, 1.0, 0.0);
    auto c = build_contour_omega_ghat(p, 3, false);
    ValueFn g = [p](const BranchPoint& z) { return aux_ghat(p, z.value()); };
    ValueFn twice = [p](const BranchPoint& z) { return 2.0 * aux_ghat(p, z.value()); };
    double same = rouche_margin(g, g, c);
    CHECK(same > 0.0);
    double min_g = INFINITY;
    for (const auto& v : c.polyline(4096)) min_g = std::min(min_g, std::abs(aux_ghat(p, v)));
    CHECK(same == doctest::Approx(min_g).epsilon(1e-3));
    CHECK(rouche_margin(twice, g, c) <= 0.0);
    // a small perturbation keeps the certificate and the count
    ValueFn near = [p](const BranchPoint& z) { return aux_ghat(p, z.value()) + 0.05 * std::exp(Complex(0, 0.1) * z.value()); };
    CHECK(rouche_margin(near, g, c) > 0.0);
}
