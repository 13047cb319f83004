#include <doctest.h>

#include <cmath>
#include <cstring>

#include "gallagher/errors.hpp"
#include "gallagher/kernels.hpp"
#include "gallagher/parallel.hpp"
#include "support.hpp"

using namespace gallagher;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<double> reals(testgen::Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) x = testgen::uniform(rng, -1, 1);
    return v;
}

// Restores the default thread budget when a test ends.
struct ThreadCap {
    explicit ThreadCap(int n) { set_thread_cap(n); }
    ~ThreadCap() { set_thread_cap(0); }
};

}  // namespace

TEST_CASE("property: parallel kernels are bit-identical to the serial references") {
    testgen::Rng rng(801);
    for (int threads : {1, 2, 3, 8}) {
        ThreadCap cap(threads);
        for (int trial = 0; trial < 10; ++trial) {
            const auto spec = testgen::expsum(rng, static_cast<std::size_t>(testgen::integer(rng, 1, 300)));
            auto kernel = [](double u) { return std::exp(-u * u); };
            REQUIRE(bit_equal(kernels::hermitian_form(spec.nu, spec.s, kernel),
                              kernels::hermitian_form_serial(spec.nu, spec.s, kernel)));

            const auto f = reals(rng, static_cast<std::size_t>(testgen::integer(rng, 50, 3000)));
            const auto w = reals(rng, static_cast<std::size_t>(testgen::integer(rng, 1, 40)));
            std::vector<double> a(f.size() - w.size() + 1), b(a.size());
            kernels::window_sums(f, 0, w, a);
            kernels::window_sums_serial(f, 0, w, b);
            for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(bit_equal(a[i], b[i]));

            auto corr = reals(rng, 2 * static_cast<std::size_t>(testgen::integer(rng, 0, 30)) + 1);
            REQUIRE(bit_equal(kernels::toeplitz_form(f, corr), kernels::toeplitz_form_serial(f, corr)));
        }
    }
}

TEST_CASE("kernels against direct loops") {
    testgen::Rng rng(802);
    const auto f = reals(rng, 200);
    const auto corr = reals(rng, 11);
    double direct = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) {
            const long long lag = static_cast<long long>(i) - static_cast<long long>(j);
            if (std::abs(lag) <= 5) direct += f[i] * f[j] * corr[static_cast<std::size_t>(lag + 5)];
        }
    CHECK(kernels::toeplitz_form(f, corr) == doctest::Approx(direct).epsilon(1e-12));

    std::vector<double> out(3);
    const std::vector<double> data{1, 2, 3, 4, 5, 6}, w{1, -1};
    kernels::window_sums(data, 2, w, out);
    CHECK(out == std::vector<double>{-1, -1, -1});
    CHECK(kernels::sum_of_squares(data) == 91);
    CHECK(kernels::ordered_sum(data) == 21);
}

TEST_CASE("kernel guards") {
    const std::vector<double> f{1, 2, 3}, w{1, 1, 1};
    std::vector<double> out(2);
    CHECK_THROWS_AS(kernels::window_sums(f, 0, w, out), RangeError);
    CHECK_THROWS_AS(kernels::window_sums(f, 0, std::vector<double>{}, out), DegenerateInputError);
    CHECK_THROWS_AS(kernels::toeplitz_form(f, std::vector<double>{1, 2}), DegenerateInputError);
}

TEST_CASE("parallel_for propagates the first exception") {
    CHECK_THROWS_AS(parallel_for(100, [](std::size_t i) {
                        if (i == 37) throw RangeError("boom");
                    }),
                    RangeError);
    std::vector<int> hit(1000, 0);
    parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; });
    for (int h : hit) REQUIRE(h == 1);
}
