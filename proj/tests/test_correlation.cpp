#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gallagher/correlation.hpp"
#include "support.hpp"

using namespace gallagher;

namespace {

constexpr double kPi = std::numbers::pi;

IntWeight random_int_weight(testgen::Rng& rng, int max_len) {
    IntWeight w;
    w.a = testgen::integer(rng, -20, 20);
    w.values.resize(static_cast<std::size_t>(testgen::integer(rng, 1, max_len)));
    for (auto& v : w.values) v = {testgen::uniform(rng, -1, 1), testgen::uniform(rng, -1, 1)};
    return w;
}

std::complex<double> direct_dft(const IntWeight& w, double alpha) {
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < w.values.size(); ++i)
        s += w.values[i] * std::polar(1.0, 2 * kPi * static_cast<double>(w.a + static_cast<long long>(i)) * alpha);
    return s;
}

}  // namespace

TEST_CASE("step correlation is the scaled triangle") {
    for (long long d : {1LL, 5LL, 16LL}) {
        const auto t = autocorrelation(IntWeight::unit_step(d));
        const auto tri = make_weight(WeightSpec{WeightFamily::cesaro, static_cast<double>(d), 0, 1});
        for (long long k = -d; k <= d; ++k)
            CHECK(std::abs(t.at(k).real() / static_cast<double>(d) - eval(tri, static_cast<double>(k))) <= 1e-15);
        CHECK(t.at(d + 1) == std::complex<double>{});
    }
}

TEST_CASE("correlation: point mass and energy") {
    IntWeight point{3, {{2, 1}}};
    const auto t = autocorrelation(point);
    CHECK(t.max_lag == 0);
    CHECK(t.at(0) == std::complex<double>(5, 0));
    testgen::Rng rng(601);
    const auto w = random_int_weight(rng, 30);
    double energy = 0;
    for (auto v : w.values) energy += std::norm(v);
    CHECK(autocorrelation(w).at(0).real() == doctest::Approx(energy).epsilon(1e-14));
}

TEST_CASE("property: hermitian symmetry and fast path equality") {
    testgen::Rng rng(602);
    for (int trial = 0; trial < 30; ++trial) {
        const auto w = random_int_weight(rng, 1 << 10);
        const auto direct = autocorrelation(w, CorrelationMethod::direct);
        const auto fast = autocorrelation(w, CorrelationMethod::fast);
        REQUIRE(direct.max_lag == fast.max_lag);
        const double scale = direct.at(0).real();
        for (long long h = -direct.max_lag; h <= direct.max_lag; ++h) {
            REQUIRE(direct.at(-h) == std::conj(direct.at(h)));
            REQUIRE(std::abs(direct.at(h) - fast.at(h)) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("property: correlation transform is the squared dft") {
    testgen::Rng rng(603);
    for (int trial = 0; trial < 30; ++trial) {
        const auto w = random_int_weight(rng, 60);
        const auto t = autocorrelation(w);
        for (int i = 0; i < 20; ++i) {
            const double alpha = testgen::uniform(rng, -0.5, 0.5);
            const auto d = dft(w, alpha);
            REQUIRE(std::abs(d - direct_dft(w, alpha)) <= 1e-12 * (1 + std::abs(d)));
            REQUIRE(std::abs(correlation_dft(t, alpha) - std::norm(d)) <= 1e-10 * std::max(1.0, std::norm(d)));
        }
        REQUIRE(positivity_check(w, alpha_grid(257)).ok);
    }
}

TEST_CASE("dft at zero and the fejer kernel") {
    const IntWeight w{2, {1.0, {0, 2}, -0.5}};
    CHECK(std::abs(dft(w, 0) - std::complex<double>(0.5, 2)) <= 1e-15);
    for (long long H : {1LL, 8LL, 13LL})
        for (double alpha : {0.01, 0.1, 0.37, -0.45}) {
            const double want = std::norm(dft(IntWeight::unit_step(H), alpha));
            CHECK(fejer(H, alpha) == doctest::Approx(want).epsilon(1e-12));
        }
    CHECK(fejer(8, 0) == 64);
    CHECK(fejer(8, 1) == 64);
    CHECK(fejer(8, 0.125) <= 1e-25);
    const auto t = autocorrelation(IntWeight::unit_step(8));
    CHECK(std::abs(correlation_dft(t, 0.125)) <= 1e-12);
}

TEST_CASE("parseval and the circle mean square") {
    testgen::Rng rng(604);
    for (int trial = 0; trial < 4; ++trial) {
        const auto w = random_int_weight(rng, 200);
        const auto r = parseval_check(w);
        CHECK(r.relative_error <= 1e-9);
        CHECK(circle_mean_square(w.values, w.a) == doctest::Approx(r.energy).epsilon(1e-12));
    }
}

TEST_CASE("sampled weights") {
    const auto s = sample_weight(make_weight("step:delta=4.5"));
    CHECK(s.offset == 1);
    CHECK(s.values == std::vector<double>{1, 1, 1, 1});
    const auto c = sample_weight(make_weight("cesaro:j=1,delta=4"));
    CHECK(c.offset == -4);
    CHECK(c.values.size() == 9);
    CHECK(c.values[4] == 1.0);
    CHECK(fejer_sum_bound_ratio(16, 4001) <= 1.0);
}
