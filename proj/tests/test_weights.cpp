#include <doctest.h>

#include <cmath>

#include "gallagher/errors.hpp"
#include "gallagher/oracles.hpp"
#include "gallagher/weights.hpp"
#include "support.hpp"

using namespace gallagher;

namespace {

// The family definitions typed in directly, independent of the splines.
double formula(const WeightSpec& s, double x) {
    const double a = std::abs(x);
    switch (s.family) {
        case WeightFamily::unit_interval: return a <= s.delta ? 1.0 : 0.0;
        case WeightFamily::unit_step: return x > 0 && x <= s.delta ? 1.0 : 0.0;
        case WeightFamily::lanczos:
            if (a <= s.delta - s.Delta) return 1.0;
            return a <= s.delta ? (s.delta - a) / s.Delta : 0.0;
        default: return s.j == 1 ? std::max(1 - a / s.delta, 0.0) : NAN;
    }
}

bool same_coefficients(const PiecewisePolynomial& a, const PiecewisePolynomial& b, double tol) {
    const auto pa = a.coalesced(), pb = b.coalesced();
    if (pa.piece_count() != pb.piece_count()) return false;
    for (std::size_t i = 0; i <= pa.piece_count(); ++i)
        if (std::abs(pa.breakpoints()[i] - pb.breakpoints()[i]) > tol) return false;
    for (std::size_t i = 0; i < pa.piece_count(); ++i) {
        const auto& ca = pa.coefficients(i);
        const auto& cb = pb.coefficients(i);
        for (std::size_t k = 0; k < std::max(ca.size(), cb.size()); ++k) {
            const double x = k < ca.size() ? ca[k] : 0.0, y = k < cb.size() ? cb[k] : 0.0;
            if (std::abs(x - y) > tol) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("weight values at stated points") {
    CHECK(eval(make_weight("cesaro:j=1,delta=2"), 1.0) == 0.5);
    const auto c1 = make_weight("cesaro:j=1,delta=1.7");
    CHECK(eval(c1, 0) == 1.0);
    CHECK(eval(c1, 1.7) == 0.0);
    CHECK(eval(c1, -1.7) == 0.0);
    CHECK(eval(make_weight("lanczos:delta=2,Delta=0.5"), 1.0) == 1.0);
    CHECK(eval(make_weight("unit:delta=1"), 1.5) == 0.0);
    CHECK(eval(make_weight("unit:delta=1"), 1.0) == 1.0);
    CHECK(eval(make_weight("cesaro:j=1,delta=1"), 0.25) == 0.75);
    CHECK(eval(make_weight("cesaro:j=2,delta=1"), 0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    const auto step = make_weight("step:delta=3");
    CHECK(eval(step, 0) == 0.0);
    CHECK(eval(step, 3) == 1.0);
    CHECK(eval(step, 3.0001) == 0.0);
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(make_weight("unit:delta=0"), ParameterDomainError);
    CHECK_THROWS_AS(make_weight("unit:delta=-1"), ParameterDomainError);
    CHECK_THROWS_AS(make_weight("lanczos:delta=1,Delta=2"), ParameterDomainError);
    CHECK_THROWS_AS(make_weight("cesaro:j=-1,delta=1"), ParameterDomainError);
    CHECK_THROWS_AS(parse_weight_spec("triangle:delta=1"), ParameterDomainError);
    CHECK_THROWS(cesaro_family(kMaxCesaroOrder + 1, 1.0));
}

TEST_CASE("spec strings round-trip") {
    for (const char* text : {"unit:delta=1", "step:delta=8", "cesaro:j=2,delta=1.5", "lanczos:delta=2,Delta=0.5"}) {
        const auto s = parse_weight_spec(text);
        const auto back = parse_weight_spec(to_string(s));
        CHECK(back.family == s.family);
        CHECK(back.delta == s.delta);
        CHECK(back.Delta == s.Delta);
        CHECK(back.j == s.j);
    }
}

TEST_CASE("family identities") {
    const double d = 1.3;
    CHECK(same_coefficients(make_weight("cesaro:j=0,delta=1.3").spline(), make_weight("unit:delta=1.3").spline(), 0));
    CHECK(same_coefficients(make_weight("lanczos:delta=1.3,Delta=1.3").spline(),
                            make_weight("cesaro:j=1,delta=1.3").spline(), 1e-15));
    for (int j = 1; j <= kMaxCesaroOrder; ++j) {
        const auto c = cesaro_family(j, d);
        CHECK(c.spline().lower() == doctest::Approx(-d).epsilon(1e-15));
        CHECK(c.spline().upper() == doctest::Approx(d).epsilon(1e-15));
        CHECK(c.spline().degree() <= PiecewisePolynomial::kMaxDegree);
    }
    CHECK(same_coefficients(cesaro_family(2, d).spline(), oracle::remark_cubic(d), 1e-12));
}

TEST_CASE("convolution identities") {
    for (double d : {0.5, 1.0, 2.0, 3.7}) {
        CAPTURE(d);
        const auto box = make_weight(WeightSpec{WeightFamily::unit_interval, d / 2, 0, 0}).spline();
        CHECK(same_coefficients(convolve(box, box).scaled(1 / d), make_weight(WeightSpec{WeightFamily::cesaro, d, 0, 1}).spline(),
                                1e-12));
        const auto tri = make_weight(WeightSpec{WeightFamily::cesaro, d / 2, 0, 1}).spline();
        CHECK(same_coefficients(convolve(tri, tri).scaled(1 / d), oracle::remark_cubic(d), 1e-12));
        CHECK(convolve(box, PiecewisePolynomial::zero(-1, 1)).is_zero());
    }
}

TEST_CASE("normalized self-convolution") {
    const double d = 0.8;
    const auto box = make_weight(WeightSpec{WeightFamily::unit_interval, d / 2, 0, 0});
    const auto n = normalized_self_convolution(box);
    CHECK(same_coefficients(n.spline(), make_weight(WeightSpec{WeightFamily::cesaro, d, 0, 1}).spline(), 1e-12));
    CHECK(n.support_radius() == doctest::Approx(2 * box.support_radius()));
    const auto c1 = make_weight("cesaro:j=1,delta=1.1");
    const auto nc = normalized_self_convolution(c1);
    const double I = c1.spline().integral();
    CHECK(nc.spline().integral() == doctest::Approx(I * I / (2 * 1.1)).epsilon(1e-13));
    CHECK(cesaro_family(2, 1.9).spline().integral() == doctest::Approx(1.9 / 4).epsilon(1e-13));
}

TEST_CASE("property: built-in weights match their definitions") {
    testgen::Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = testgen::weight_spec(rng, false);
        if (s.family == WeightFamily::cesaro) s.j = 1;
        const auto w = make_weight(s);
        CAPTURE(to_string(s));
        for (int i = 0; i < 50; ++i) {
            const double x = testgen::uniform(rng, -1.2 * s.delta, 1.2 * s.delta);
            const double want = formula(s, x);
            REQUIRE(std::abs(eval(w, x) - want) <= 1e-14 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("property: weights are even, nonnegative and bounded by one") {
    testgen::Rng rng(102);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = testgen::weight_spec(rng);
        const auto w = make_weight(s);
        CAPTURE(to_string(s));
        REQUIRE(w.is_even());
        for (int i = 0; i < 40; ++i) {
            const double x = testgen::uniform(rng, -1.5 * s.delta, 1.5 * s.delta);
            const double v = eval(w, x);
            REQUIRE(std::abs(v - eval(w, -x)) <= 1e-14);  // spline pieces use local coordinates
            REQUIRE(v >= -1e-15);
            REQUIRE(v <= 1 + 1e-15);
        }
    }
}

TEST_CASE("property: convolution is commutative and bilinear") {
    testgen::Rng rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = testgen::spline(rng), q = testgen::spline(rng), r = testgen::spline(rng);
        const auto pq = convolve(p, q), qp = convolve(q, p);
        REQUIRE(pq.lower() == doctest::Approx(p.lower() + q.lower()).epsilon(1e-15));
        REQUIRE(pq.upper() == doctest::Approx(p.upper() + q.upper()).epsilon(1e-15));
        REQUIRE(pq.degree() <= p.degree() + q.degree() + 1);
        const double a = testgen::uniform(rng, -2, 2);
        for (int i = 0; i < 20; ++i) {
            const double x = testgen::uniform(rng, pq.lower() - 0.5, pq.upper() + 0.5);
            const double scale = 1 + std::abs(pq(x));
            REQUIRE(std::abs(pq(x) - qp(x)) <= 1e-12 * scale);
            const double lin = convolve(p.scaled(a), q)(x) + convolve(r, q)(x);
            const double direct = a * pq(x) + convolve(r, q)(x);
            REQUIRE(std::abs(lin - direct) <= 1e-12 * (1 + std::abs(direct)));
        }
    }
}

TEST_CASE("property: cesaro family is even") {
    testgen::Rng rng(104);
    for (int j = 0; j <= kMaxCesaroOrder; ++j) {
        const double d = testgen::uniform(rng, 0.3, 4);
        const auto w = cesaro_family(j, d);
        for (int i = 0; i < 200; ++i) {
            const double x = testgen::uniform(rng, -d, d);
            REQUIRE(std::abs(eval(w, x) - eval(w, -x)) <= 1e-13);
        }
    }
}

TEST_CASE("property: integer translates of the triangle sum to h") {
    for (int h = 1; h <= 12; ++h)
        for (int i = 0; i < 16; ++i) {
            const double x = i / 16.0 + 0.03;
            const auto c = make_weight(WeightSpec{WeightFamily::cesaro, static_cast<double>(h), 0, 1});
            double total = 0;
            for (int n = -h - 2; n <= h + 3; ++n) total += eval(c, n - x);
            REQUIRE(std::abs(total - h) <= 1e-12);
        }
}

TEST_CASE("spline csv and coalescing") {
    const auto c = make_weight("cesaro:j=1,delta=2").spline();
    CHECK(c.to_csv().find("-2,0,") == 0);
    const PiecewisePolynomial split({0, 1, 2}, {{1.0}, {1.0}});
    CHECK(split.coalesced().piece_count() == 1);
    CHECK(split.integral() == 2.0);
    CHECK(split.reflected()(-1.5) == 1.0);
}
