#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gallagher/errors.hpp"
#include "gallagher/expsum.hpp"
#include "gallagher/oracles.hpp"
#include "gallagher/transforms.hpp"
#include "support.hpp"

using namespace gallagher;

namespace {
constexpr double kPi = std::numbers::pi;

ExpSumSpec single(double nu, std::complex<double> s = 1.0) { return {{nu}, {s}}; }
}  // namespace

TEST_CASE("norm square: stated values") {
    CHECK(norm_sq_2T(single(3.2), 1.7) == doctest::Approx(3.4).epsilon(1e-15));
    CHECK(norm_sq_2T(ExpSumSpec{{0, 1}, {0.0, 0.0}}, 2) == 0.0);
    const double T = 1.3, d = 0.37;
    const ExpSumSpec two{{0.5, 0.5 + d}, {1.0, 1.0}};
    const double want = 4 * T + 2 * std::sin(2 * kPi * T * d) / (kPi * d);
    CHECK(norm_sq_2T(two, T) == doctest::Approx(want).epsilon(1e-13));
    CHECK(oracle::norm_sq_quadrature(two, T) == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS((ExpSumSpec{{1, 1}, {1.0, 1.0}}.validate()), ParameterDomainError);
    CHECK_THROWS_AS((ExpSumSpec{{}, {}}.validate()), ParameterDomainError);
    CHECK_THROWS_AS((ExpSumSpec{{0, 1}, {1.0}}.validate()), ParameterDomainError);
    CHECK_THROWS_AS((ExpSumSpec{{0, NAN}, {1.0, 1.0}}.validate()), ParameterDomainError);
    CHECK_NOTHROW(random_expsum(5, 1).validate());
}

TEST_CASE("smoothed mean square: stated values") {
    const auto box = make_weight("unit:delta=0.6");
    CHECK(smoothed_mean_square(single(2.0), box) == doctest::Approx(1.2).epsilon(1e-14));
    const auto c = make_weight("cesaro:j=2,delta=0.5");
    const ExpSumSpec far{{0, 10, 20}, {1.0, {0, 2}, 0.5}};
    double l2 = 0;
    const auto& sp = c.spline();
    for (std::size_t i = 0; i < sp.piece_count(); ++i) {
        const PiecewisePolynomial one({sp.breakpoints()[i], sp.breakpoints()[i + 1]}, {sp.coefficients(i)});
        l2 += convolve(one, one.reflected())(0);
    }
    CHECK(smoothed_mean_square(far, c) == doctest::Approx(5.25 * l2).epsilon(1e-12));
}

TEST_CASE("window integral: hand enumeration") {
    const ExpSumSpec two{{0, 1}, {1.0, 1.0}};
    CHECK(window_integral(two, 2) == doctest::Approx(6).epsilon(1e-15));
    CHECK(oracle::window_integral_pairs(two, 2) == doctest::Approx(6).epsilon(1e-15));
    const auto r = gallagher_original(single(0.3), 0.5, 0.5);
    CHECK(r.norm_sq == doctest::Approx(2 * (0.5 / 0.5)).epsilon(1e-15));
    CHECK(r.integral == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.holds);
    CHECK(r.slack > 0);
    CHECK_THROWS_AS(gallagher_original(single(0), 1, 1.0), ParameterDomainError);
    CHECK_THROWS_AS(gallagher_original(single(0), 1, 0.0), ParameterDomainError);
}

TEST_CASE("property: exact forms match the oracles") {
    testgen::Rng rng(301);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = testgen::expsum(rng, 10);
        const double T = testgen::uniform(rng, 0.05, 1.0);
        const auto w = make_weight(testgen::weight_spec(rng));
        const double delta = testgen::uniform(rng, 0.3, 4);
        REQUIRE(testgen::rel(norm_sq_2T(spec, T), oracle::norm_sq_quadrature(spec, T)) <= 1e-8);
        REQUIRE(testgen::rel(smoothed_mean_square(spec, w), oracle::smoothed_quadrature(spec, w)) <= 1e-8);
        REQUIRE(testgen::rel(window_integral(spec, delta), oracle::window_integral_pairs(spec, delta)) <= 1e-8);
    }
}

TEST_CASE("property: the lemma holds and scales quadratically") {
    testgen::Rng rng(302);
    int trivial = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto spec = testgen::expsum(rng, static_cast<std::size_t>(testgen::integer(rng, 1, 25)));
        const auto w = make_weight(testgen::weight_spec(rng));
        const double T = testgen::uniform(rng, 0.01, 0.5);
        const auto r = verify_lemma(spec, w, T);
        CAPTURE(w.label());
        CAPTURE(T);
        REQUIRE(r.holds);
        REQUIRE(r.slack >= -1e-9 * std::max(1.0, r.rhs));
        trivial += r.trivial;

        const std::complex<double> c(testgen::uniform(rng, -3, 3), testgen::uniform(rng, -3, 3));
        auto scaled = spec;
        for (auto& s : scaled.s) s *= c;
        const auto rs = verify_lemma(scaled, w, T);
        REQUIRE(testgen::rel(rs.lhs, std::norm(c) * r.lhs) <= 1e-12);
        REQUIRE(testgen::rel(rs.rhs, std::norm(c) * r.rhs) <= 1e-12);
    }
    MESSAGE("trivial cases: " << trivial);
}

TEST_CASE("zero spec gives zero on both sides") {
    const ExpSumSpec zero{{0, 1, 2}, {0.0, 0.0, 0.0}};
    const auto r = verify_lemma(zero, make_weight("cesaro:j=1,delta=1"), 0.2);
    CHECK(r.lhs == 0.0);
    CHECK(r.rhs == 0.0);
    CHECK(r.holds);
    const auto ci = cesaro_instance(zero, 10, 0.3);
    CHECK(ci.report.lhs == 0.0);
    CHECK(ci.report.rhs == 0.0);
}

TEST_CASE("property: majorant principle for cesaro weights") {
    testgen::Rng rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        const auto spec = testgen::expsum(rng, 12);
        auto major = spec;
        for (auto& s : major.s) s = std::abs(s) * testgen::uniform(rng, 1.0, 1.5);
        const auto w = cesaro_family(testgen::integer(rng, 1, 3), testgen::uniform(rng, 0.2, 3));
        REQUIRE(smoothed_mean_square(spec, w) <= smoothed_mean_square(major, w) * (1 + 1e-12));
    }
}

TEST_CASE("cesaro instance constant is 1/m") {
    testgen::Rng rng(304);
    for (double theta : {0.1, 0.25, 0.4, 0.7}) {
        const double T = 10;
        const auto ci = cesaro_instance(testgen::expsum(rng, 8), T, theta);
        CAPTURE(theta);
        CHECK(std::abs(ci.constant_times_m - 1) <= 1e-10);
        CHECK(ci.report.holds);
        if (theta == 0.25) {
            const double want = std::pow(kPi, 4) * theta * theta * T * T / std::pow(std::sin(kPi * theta), 4);
            CHECK(ci.report.constant == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("property: original inequality with its explicit constant") {
    testgen::Rng rng(305);
    for (int trial = 0; trial < 60; ++trial) {
        const auto spec = testgen::expsum(rng, 15);
        const double delta = testgen::uniform(rng, 0.1, 3);
        const double theta = testgen::uniform(rng, 0.05, 0.95);
        REQUIRE(gallagher_original(spec, delta, theta).holds);
    }
}

TEST_CASE("report csv") {
    const auto r = make_report(2, 3, 0.5, 1, 1, 3);
    CHECK(r.holds);
    CHECK(r.slack == 2);
    CHECK(report_csv(r).rfind("lhs,m,rhs,slack,holds,trivial\n", 0) == 0);
    CHECK_FALSE(make_report(1, 1, 1, 1, 2, 1).holds);
}
