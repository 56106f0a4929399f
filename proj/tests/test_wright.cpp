#include "doctest.h"
#include "test_util.hpp"

#include "lommelq/errors.hpp"
#include "lommelq/wright.hpp"

using namespace lommelq;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<WrightTarget> targets() {
    return {make_wright_target(1.0), make_wright_target(2.0 * std::exp(Complex(0, pi / 3.0))),
            make_wright_target(Complex(0.5, -0.2))};
}

} // namespace

TEST_CASE("target polar form") {
    auto t = make_wright_target(Complex(-2.0, 0.0));
    CHECK(t.A == 2.0);
    CHECK(t.alpha == pi);
    CHECK_THROWS_AS(make_wright_target(0.0), ParamError);
    CHECK_THROWS_AS(make_wright_target(Complex(NAN, 0.0)), ParamError);
}

TEST_CASE("residual of an exact root") {
    auto t = make_wright_target(std::exp(1.0));
    CHECK(std::abs(wright_residual(t, 1.0)) == 0.0);
}

TEST_CASE("seed quantities for a = 1") {
    auto t = make_wright_target(1.0);
    auto s = wright_seed(t, 5);
    CHECK(s.H == doctest::Approx(9.5 * pi).epsilon(1e-15));
    CHECK(s.beta == doctest::Approx(std::log(1.0 / (9.5 * pi))).epsilon(1e-15));
    CHECK(s.valid);
    CHECK(s.y > 9.0 * pi);
    CHECK(s.y < 10.0 * pi);
    CHECK(s.x == doctest::Approx((s.H + s.eta) * std::tan(s.eta)).epsilon(1e-15));
    auto neg = wright_seed(t, -5);
    CHECK(neg.y > -10.0 * pi);
    CHECK(neg.y < -9.0 * pi);
    // eta is negative and shrinks to zero
    double prev = -INFINITY;
    for (long n : {5L, 20L, 100L, 1000L, 10000L}) {
        auto sn = wright_seed(t, n);
        CHECK(sn.eta < 0.0);
        CHECK(std::abs(sn.eta) < std::abs(prev));
        prev = sn.eta;
    }
    CHECK_THROWS_AS(wright_seed(t, 0), ParamError);
}

TEST_CASE("beta decreases monotonically in |n|") {
    for (const auto& t : targets()) {
        double prev = INFINITY;
        for (long n = 1; n <= 300; ++n) {
            double b = wright_seed(t, n).beta;
            CHECK(b < prev);
            prev = b;
        }
    }
}

TEST_CASE("bounds for a = 1, n = 10") {
    auto t = make_wright_target(1.0);
    auto b = wright_bounds(t, 10);
    CHECK(b.x_lo == doctest::Approx(2.0 * std::log(1.0 / (21.0 * pi)) - 1.0));
    CHECK(b.x_hi == doctest::Approx(std::log(1.0 / (18.0 * pi)) + 1.0));
    CHECK(b.y_lo == doctest::Approx(19.0 * pi));
    CHECK(b.y_hi == doctest::Approx(20.0 * pi));
    CHECK(b.contains(wright_seed(t, 10).z()));
}

TEST_CASE("validity gate") {
    // the inequalities fail when |log A| is huge compared with H
    auto t = make_wright_target(1e-300);
    CHECK_FALSE(wright_valid(t, 1));
    CHECK_THROWS_AS(wright_bounds(t, 1), ValidityError);
    auto s = wright_seed(t, 1);
    CHECK_FALSE(s.valid);
    CHECK_THROWS_AS(wright_refine(t, s), ValidityError);
}

TEST_CASE("refinement for a = 1, n = 20") {
    auto t = make_wright_target(1.0);
    auto r = wright_refine(t, wright_seed(t, 20), 1e-12);
    CHECK(r.residual <= 1e-12);
    CHECK(r.iterations <= 8);
    CHECK(wright_bounds(t, 20).contains(r.z));
    CHECK_THROWS_AS(wright_refine(t, wright_seed(t, 20), 1e-15), ParamError);
}

TEST_CASE("seeds, boxes and refinement over the index range") {
    for (const auto& t : targets()) {
        for (long an = 10; an <= 200; ++an) {
            for (long n : {an, -an}) {
                auto s = wright_seed(t, n);
                REQUIRE(s.valid);
                auto box = wright_bounds(t, n);
                CHECK(box.contains(s.z()));
                auto r = wright_refine(t, s, 1e-12);
                CHECK(r.residual <= 1e-12);
                CHECK(r.iterations <= 12);
                CHECK(box.contains(r.z));
            }
        }
    }
}

TEST_CASE("seed error shrinks with |n| and with more eta terms") {
    for (const auto& t : targets()) {
        double prev = INFINITY;
        for (long n : {10L, 50L, 100L, 200L}) {
            auto s = wright_seed(t, n);
            double gap = std::abs(wright_refine(t, s, 1e-12).z - s.z());
            CHECK(gap <= prev);
            prev = gap;
        }
        auto s1 = wright_seed(t, 50, 1), s3 = wright_seed(t, 50, 3);
        Complex z = wright_refine(t, s3, 1e-12).z;
        CHECK(std::abs(z - s3.z()) < std::abs(z - s1.z()));
    }
}

TEST_CASE("refined zeros are distinct and ordered") {
    auto t = make_wright_target(1.0);
    std::vector<Complex> zs;
    for (long n = 10; n <= 60; ++n) zs.push_back(wright_refine(t, wright_seed(t, n)).z);
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) CHECK(zs[i].imag() < zs[i + 1].imag());
    double min_gap = INFINITY;
    for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j) min_gap = std::min(min_gap, std::abs(zs[i] - zs[j]));
    CHECK(min_gap > 1.0);
}

TEST_CASE("subsequence for small a") {
    auto t = make_wright_target(1e-3);
    CHECK(subseq_hypothesis(t, 1));
    CHECK_FALSE(subseq_hypothesis(make_wright_target(1.0), 1));
    CHECK_THROWS_AS(wright_subseq_seed(make_wright_target(1.0), 1, 20), HypothesisError);
    for (long k = 20; k <= 40; ++k) {
        auto s = wright_subseq_seed(t, 1, k);
        CHECK(s.n == -k * k);
        auto box = subseq_bounds(t, 1, k);
        CHECK(box.contains(s.z()));
        CHECK(box.contains(wright_refine(t, s).z));
        CHECK(box.y_lo == doctest::Approx(-(2.0 * pi * (k + 1.0) * (k + 1.0) - t.alpha - pi)));
    }
}
