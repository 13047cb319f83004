#include "gallagher/oracles.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <numbers>

namespace gallagher::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Adaptive Gauss-Kronrod for smooth, non-oscillatory integrands. The
// tolerance is relative to the running estimate, so depth stays bounded.
template <class F>
double kronrod(F&& f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 8, 1e-13);
}

// Fixed 30-point Gauss-Legendre on panels that each hold at most half a
// cycle of the fastest oscillation: the rule then resolves the integrand to
// rounding.
template <class F>
double paneled(F&& f, double a, double b, double max_frequency) {
    const auto panels = static_cast<long long>(std::ceil((b - a) * max_frequency * 2)) + 1;
    const double step = (b - a) / static_cast<double>(panels);
    double total = 0;
    for (long long i = 0; i < panels; ++i) {
        const double lo = a + step * static_cast<double>(i);
        const double hi = i + 1 == panels ? b : lo + step;
        total += boost::math::quadrature::gauss<double, 30>::integrate(f, lo, hi);
    }
    return total;
}

}  // namespace

double norm_sq_quadrature(const ExpSumSpec& spec, double T) {
    auto integrand = [&](double t) {
        std::complex<double> s = 0;
        for (std::size_t k = 0; k < spec.size(); ++k) s += spec.s[k] * std::polar(1.0, 2 * kPi * spec.nu[k] * t);
        return std::norm(s);
    };
    const double spread = spec.nu.back() - spec.nu.front();
    return paneled(integrand, -T, T, spread + 1);
}

double smoothed_quadrature(const ExpSumSpec& spec, const Weight& w) {
    std::vector<double> cuts;
    for (double nu : spec.nu)
        for (double b : w.spline().breakpoints()) cuts.push_back(nu + b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto integrand = [&](double x) {
        std::complex<double> s = 0;
        for (std::size_t k = 0; k < spec.size(); ++k) s += spec.s[k] * w(x - spec.nu[k]);
        return std::norm(s);
    };
    double total = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += boost::math::quadrature::gauss<double, 20>::integrate(integrand, cuts[i], cuts[i + 1]);
    return total;
}

double window_integral_pairs(const ExpSumSpec& spec, double delta) {
    double total = 0;
    for (std::size_t a = 0; a < spec.size(); ++a)
        for (std::size_t b = 0; b < spec.size(); ++b) {
            const double overlap = std::max(0.0, delta - std::abs(spec.nu[a] - spec.nu[b]));
            total += (spec.s[a] * std::conj(spec.s[b])).real() * overlap;
        }
    return total;
}

double dirichlet_norm_quadrature(const DirichletPoly& D, double T) {
    auto integrand = [&](double t) {
        std::complex<double> s = 0;
        for (std::size_t i = 0; i < D.a.size(); ++i) {
            const double n = static_cast<double>(D.n_min + static_cast<long long>(i));
            s += D.a[i] * std::polar(1.0, t * std::log(n));
        }
        return std::norm(s);
    };
    const double spread = std::log(static_cast<double>(D.n_max()) / static_cast<double>(D.n_min)) / (2 * kPi);
    return paneled(integrand, -T, T, spread + 1);
}

double theorem1_single_term(long long n, double T) {
    const double x = static_cast<double>(n);
    auto integrand = [&](double y) {
        const double c = std::max(0.0, 1 - std::abs(x - y) / (y / T));
        return c * c / y;
    };
    return T * T * (kronrod(integrand, x * T / (T + 1), x) + kronrod(integrand, x, x * T / (T - 1)));
}

long long divisor_count(int k, long long n) {
    if (k == 1) return 1;
    long long count = 0;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) count += divisor_count(k - 1, n / d);
    return count;
}

double selberg_brute(const std::function<double(long long)>& f, const std::function<double(long long)>& mean,
                     long long N, long long h) {
    long double total = 0;
    for (long long x = N + 1; x <= 2 * N; ++x) {
        long double s = 0;
        for (long long n = x + 1; n <= x + h; ++n) s += f(n);
        const long double d = s - mean(x);
        total += d * d;
    }
    return static_cast<double>(total);
}

double weighted_brute(const std::function<double(long long)>& f, const std::function<double(long long)>& w,
                      long long lo, long long hi, const std::function<double(long long)>& mean, long long N) {
    long double total = 0;
    for (long long x = N + 1; x <= 2 * N; ++x) {
        long double s = 0;
        for (long long k = lo; k <= hi; ++k) s += static_cast<long double>(w(k)) * f(x + k);
        const long double d = s - mean(x);
        total += d * d;
    }
    return static_cast<double>(total);
}

PiecewisePolynomial remark_cubic(double delta) {
    // (6|t|^3 - 6 delta t^2 + delta^3) / (3 delta^3) on |t| <= delta/2,
    // 2 (delta - |t|)^3 / (3 delta^3) on delta/2 < |t| <= delta,
    // expanded in the local variable u = t - b_i of each piece.
    const double d = delta, d3 = d * d * d, h = d / 2;
    // [-d, -d/2]: 2 (d + t)^3 / (3 d^3) = 2 u^3 / (3 d^3)
    std::vector<double> p0{0, 0, 0, 2 / (3 * d3)};
    // [-d/2, 0]: t = u - h, (-6 t^3 - 6 d t^2 + d^3) / (3 d^3)
    std::vector<double> p1{(-6 * (-h * h * h) - 6 * d * h * h + d3) / (3 * d3), (-18 * h * h + 12 * d * h) / (3 * d3),
                           (18 * h - 6 * d) / (3 * d3), -6 / (3 * d3)};
    // [0, d/2]: (6 u^3 - 6 d u^2 + d^3) / (3 d^3)
    std::vector<double> p2{1.0 / 3, 0, -6 * d / (3 * d3), 6 / (3 * d3)};
    // [d/2, d]: t = u + h, 2 (d - h - u)^3 / (3 d^3) = 2 (h - u)^3 / (3 d^3)
    std::vector<double> p3{2 * h * h * h / (3 * d3), -6 * h * h / (3 * d3), 6 * h / (3 * d3), -2 / (3 * d3)};
    return PiecewisePolynomial({-d, -h, 0, h, d}, {p0, p1, p2, p3});
}

}  // namespace gallagher::oracle
