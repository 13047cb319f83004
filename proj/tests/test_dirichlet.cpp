#include <doctest.h>

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "gallagher/dirichlet.hpp"
#include "gallagher/errors.hpp"
#include "gallagher/oracles.hpp"
#include "support.hpp"

using namespace gallagher;

namespace {

// T^2 integral |sum_n C_{y/T}(n - y) a_n|^2 dy / y, Gauss-Legendre between the
// kinks of every term (the integrand is smooth on each such interval).
double main_term_oracle(const DirichletPoly& D, double T) {
    std::vector<double> cuts;
    for (long long n = D.n_min; n <= D.n_max(); ++n) {
        const double x = static_cast<double>(n);
        cuts.insert(cuts.end(), {x * T / (T + 1), x, x * T / (T - 1)});
    }
    std::sort(cuts.begin(), cuts.end());
    auto integrand = [&](double y) {
        std::complex<double> s = 0;
        for (long long n = D.n_min; n <= D.n_max(); ++n) {
            const double c = std::max(0.0, 1 - std::abs(static_cast<double>(n) - y) * T / y);
            s += c * D.a[static_cast<std::size_t>(n - D.n_min)];
        }
        return std::norm(s) / y;
    };
    double total = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i])
            total += boost::math::quadrature::gauss<double, 20>::integrate(integrand, cuts[i], cuts[i + 1]);
    return T * T * total;
}

// integral (sum_{|n-y| <= Delta} |a_n|)^2 dy / y by a midpoint rule in log y.
double remainder_oracle(const DirichletPoly& D, double T, int steps) {
    const double q = std::expm1(1 / T);
    const double lo = std::log(static_cast<double>(D.n_min) / (1 + q)) - 0.01;
    const double hi = std::log(static_cast<double>(D.n_max()) / (1 - q)) + 0.01;
    const double h = (hi - lo) / steps;
    double total = 0;
    for (int i = 0; i < steps; ++i) {
        const double y = std::exp(lo + (i + 0.5) * h);
        double c = 0;
        for (long long n = D.n_min; n <= D.n_max(); ++n)
            if (std::abs(static_cast<double>(n) - y) <= y * q) c += std::abs(D.a[static_cast<std::size_t>(n - D.n_min)]);
        total += c * c * h;
    }
    return total;
}

}  // namespace

TEST_CASE("dirichlet norm: stated values") {
    const DirichletPoly one{7, {{0, 1}}};
    CHECK(d_norm_sq_2T(one, 3.5) == doctest::Approx(7).epsilon(1e-15));
    const DirichletPoly zero{2, {0.0, 0.0, 0.0}};
    CHECK(d_norm_sq_2T(zero, 10) == 0.0);
    const auto t = theorem1_rhs(zero, 10);
    CHECK(t.main == 0.0);
    CHECK(t.remainder == 0.0);
}

TEST_CASE("validation and domain errors") {
    CHECK_THROWS_AS((DirichletPoly{0, {1.0}}.validate()), ParameterDomainError);
    CHECK_THROWS_AS((DirichletPoly{1, {}}.validate()), ParameterDomainError);
    CHECK_THROWS_AS(theorem1_rhs(DirichletPoly{1, {1.0}}, 1.0), ParameterDomainError);
    CHECK_THROWS_AS(d_norm_sq_2T(DirichletPoly{1, {1.0}}, -1), ParameterDomainError);
    CHECK(std::isinf(theorem1_rhs(DirichletPoly{3, {1.0}}, 1.2).remainder));
}

TEST_CASE("property: log-frequency conversion preserves the norm") {
    testgen::Rng rng(401);
    for (int trial = 0; trial < 30; ++trial) {
        const long long lo = testgen::integer(rng, 1, 50);
        const auto D = random_dirichlet(lo, lo + testgen::integer(rng, 0, 40), rng());
        const double T = testgen::uniform(rng, 1, 200);
        REQUIRE(testgen::rel(d_norm_sq_2T(D, T), norm_sq_2T(to_expsum(D), T)) <= 1e-12);
    }
}

TEST_CASE("property: dirichlet norm matches quadrature") {
    testgen::Rng rng(402);
    for (int trial = 0; trial < 20; ++trial) {
        const auto D = random_dirichlet(1, 20, rng());
        const double T = testgen::uniform(rng, 5, 50);
        REQUIRE(testgen::rel(d_norm_sq_2T(D, T), oracle::dirichlet_norm_quadrature(D, T)) <= 1e-8);
    }
}

TEST_CASE("single term main term matches quadrature") {
    for (long long n : {1LL, 5LL, 40LL, 1000LL})
        for (double T : {3.0, 30.0, 300.0}) {
            DirichletPoly D{n, {1.0}};
            CAPTURE(n);
            CAPTURE(T);
            CHECK(testgen::rel(theorem1_rhs(D, T).main, oracle::theorem1_single_term(n, T)) <= 1e-9);
        }
}

TEST_CASE("property: main and remainder against independent integration") {
    testgen::Rng rng(403);
    for (int trial = 0; trial < 12; ++trial) {
        const long long lo = testgen::integer(rng, 1, 30);
        const auto D = random_dirichlet(lo, lo + testgen::integer(rng, 2, 25), rng());
        const double T = testgen::uniform(rng, 3, 60);
        const auto t = theorem1_rhs(D, T);
        REQUIRE(testgen::rel(t.main, main_term_oracle(D, T)) <= 1e-10);
        REQUIRE(testgen::rel(t.remainder, remainder_oracle(D, T, 400000)) <= 1e-3);
    }
}

TEST_CASE("simpson path converges to the exact main term") {
    const auto D = random_dirichlet(10, 40, 7);
    const double T = 25;
    Theorem1Options coarse, fine;
    coarse.method = fine.method = Theorem1Method::simpson;
    coarse.panels = 32;
    fine.panels = 64;
    const double exact = theorem1_rhs(D, T).main;
    const double a = theorem1_rhs(D, T, coarse).main, b = theorem1_rhs(D, T, fine).main;
    CHECK(testgen::rel(a, b) < 1e-6);
    CHECK(testgen::rel(b, exact) < 1e-6);
}

TEST_CASE("smoothed bound ratios are finite and of moderate size") {
    const auto D = random_dirichlet(1, 60, 11);
    for (double T : {100.0, 1000.0, 10000.0}) {
        const auto row = theorem1_row(D, T);
        CHECK(std::isfinite(row.ratio));
        CHECK(row.ratio > 0);
        CHECK(row.ratio < 10);
    }
}

TEST_CASE("critical-line check: zero coefficients and main-term consistency") {
    CriticalLineSpec P{5, 40, std::vector<double>(36, 1.0), std::vector<std::complex<double>>(36, 0.0)};
    auto r = corollary_check(P, 1000, 0.1);
    CHECK(r.lhs == 0.0);
    CHECK(r.main == 0.0);

    P.b.assign(36, 1.0);
    r = corollary_check(P, 1000, 0.1);
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio > 0);
    // The window C_{y/T}(n - y) vanishes outside [N1/2, 3 N2/2] for T > 2.
    CHECK(testgen::rel(r.main, theorem1_rhs(P.coefficients(), 1000).main) <= 1e-12);
    CHECK(r.bound == doctest::Approx(std::pow(40.0, 1.1) / 1e6).epsilon(1e-14));
    CHECK_THROWS_AS(corollary_check(P, 1000, 0), ParameterDomainError);
}
