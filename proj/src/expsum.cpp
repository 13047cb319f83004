#include "gallagher/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gallagher/csv.hpp"
#include "gallagher/errors.hpp"
#include "gallagher/kernels.hpp"
#include "gallagher/transforms.hpp"

namespace gallagher {

namespace {

constexpr double kPi = std::numbers::pi;

void require_T(double T) {
    if (!(T > 0) || !std::isfinite(T)) throw ParameterDomainError("T must be a positive real");
}

void require_theta(double theta) {
    if (!(theta > 0 && theta < 1)) throw ParameterDomainError("theta must lie in (0, 1)");
}

}  // namespace

void ExpSumSpec::validate() const {
    if (nu.empty()) throw ParameterDomainError("exponential sum needs at least one frequency");
    if (nu.size() != s.size()) throw ParameterDomainError("frequency and coefficient counts differ");
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (!std::isfinite(nu[i]) || !std::isfinite(s[i].real()) || !std::isfinite(s[i].imag()))
            throw ParameterDomainError("non-finite frequency or coefficient");
        if (i && !(nu[i] > nu[i - 1])) throw ParameterDomainError("frequencies must be strictly increasing");
    }
}

ExpSumSpec random_expsum(std::size_t terms, std::uint64_t seed, double nu_max) {
    if (terms == 0) throw ParameterDomainError("random_expsum: need at least one term");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ExpSumSpec spec;
    while (spec.nu.size() < terms) {
        spec.nu.push_back(nu_max * unit(rng));
        std::sort(spec.nu.begin(), spec.nu.end());
        spec.nu.erase(std::unique(spec.nu.begin(), spec.nu.end()), spec.nu.end());
    }
    for (std::size_t i = 0; i < terms; ++i) {
        const double radius = std::sqrt(unit(rng));
        const double angle = 2 * kPi * unit(rng);
        spec.s.push_back(std::polar(radius, angle));
    }
    return spec;
}

ExpSumSpec read_expsum_csv(const std::string& path) {
    ExpSumSpec spec;
    for (const auto& cells : csv::read_rows(path)) {
        if (cells.size() < 2 || cells.size() > 3)
            throw ParameterDomainError("frequency file rows must be nu,re[,im]");
        spec.nu.push_back(csv::parse_double(cells[0], "nu"));
        const double re = csv::parse_double(cells[1], "re");
        const double im = cells.size() == 3 ? csv::parse_double(cells[2], "im") : 0.0;
        spec.s.emplace_back(re, im);
    }
    spec.validate();
    return spec;
}

InequalityReport make_report(double norm_sq, double integral, double m, double constant, double lhs, double rhs) {
    InequalityReport r{norm_sq, integral, m, constant, lhs, rhs, rhs - lhs, true, false};
    r.holds = r.slack >= -1e-9 * std::max(1.0, rhs);
    return r;
}

double norm_sq_2T(const ExpSumSpec& spec, double T) {
    spec.validate();
    require_T(T);
    const double value =
        kernels::hermitian_form(spec.nu, spec.s, [T](double u) { return 2 * T * sinc(2 * T * u); });
    return std::max(0.0, value);
}

PiecewisePolynomial self_correlation(const Weight& w) {
    return convolve(w.spline().reflected(), w.spline());
}

namespace {

double quadratic_with(const ExpSumSpec& spec, const PiecewisePolynomial& kernel) {
    return std::max(0.0, kernels::hermitian_form(spec.nu, spec.s, [&kernel](double u) { return kernel(u); }));
}

}  // namespace

double smoothed_mean_square(const ExpSumSpec& spec, const Weight& w) {
    spec.validate();
    return quadratic_with(spec, self_correlation(w));
}

InequalityReport verify_lemma(const ExpSumSpec& spec, const PiecewisePolynomial& self_corr, double m, double w0_sq,
                              double T) {
    spec.validate();
    require_T(T);
    const double norm = norm_sq_2T(spec, T);
    const double integral = quadratic_with(spec, self_corr);
    auto r = make_report(norm, integral, m, 1.0, m * norm, integral);
    // Numerically vanishing minimum: the statement degenerates to 0 <= rhs.
    r.trivial = m <= 1e-24 * w0_sq;
    if (r.trivial) r.holds = true;
    return r;
}

InequalityReport verify_lemma(const ExpSumSpec& spec, const Weight& w, double T) {
    require_T(T);
    const double m = min_sq_on_interval(w, T).m;
    const double w0 = std::abs(transform(w, 0.0));
    return verify_lemma(spec, self_correlation(w), m, w0 * w0, T);
}

double window_integral(const ExpSumSpec& spec, double delta) {
    spec.validate();
    if (!(delta > 0) || !std::isfinite(delta)) throw ParameterDomainError("delta must be a positive real");
    const std::size_t n = spec.size();
    std::vector<std::complex<long double>> prefix(n + 1);
    for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + std::complex<long double>(spec.s[k]);

    // x -> window {nu : x < nu <= x + delta} is constant between consecutive
    // points of {nu} u {nu - delta}.
    std::vector<double> cuts;
    cuts.reserve(2 * n);
    for (double v : spec.nu) {
        cuts.push_back(v);
        cuts.push_back(v - delta);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    long double total = 0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        const auto lo = std::upper_bound(spec.nu.begin(), spec.nu.end(), mid) - spec.nu.begin();
        const auto hi = std::upper_bound(spec.nu.begin(), spec.nu.end(), mid + delta) - spec.nu.begin();
        if (lo == hi) continue;
        const auto sum = prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo)];
        total += std::norm(sum) * (static_cast<long double>(cuts[i + 1]) - cuts[i]);
    }
    return static_cast<double>(total);
}

InequalityReport gallagher_original(const ExpSumSpec& spec, double delta, double theta) {
    require_theta(theta);
    const double integral = window_integral(spec, delta);
    const double T = theta / delta;
    const double norm = norm_sq_2T(spec, T);
    const double sn = std::sin(kPi * theta);
    const double constant = kPi * kPi * theta * theta / (delta * delta * sn * sn);
    return make_report(norm, integral, 0.0, constant, norm, constant * integral);
}

CesaroInstance cesaro_instance(const ExpSumSpec& spec, double T, double theta) {
    require_theta(theta);
    require_T(T);
    const auto w = make_weight(WeightSpec{WeightFamily::cesaro, theta / T, 0.0, 1});
    const double m = min_sq_on_interval(w, T).m;
    const double sn = std::sin(kPi * theta);
    const double constant = std::pow(kPi, 4) * theta * theta * T * T / (sn * sn * sn * sn);
    const double norm = norm_sq_2T(spec, T);
    const double integral = smoothed_mean_square(spec, w);
    return {make_report(norm, integral, m, constant, norm, constant * integral), constant * m};
}

std::string report_csv(const InequalityReport& r) {
    std::string out = "lhs,m,rhs,slack,holds,trivial\n";
    out += csv::row({csv::format(r.lhs), csv::format(r.m), csv::format(r.rhs), csv::format(r.slack),
                     csv::format(r.holds), csv::format(r.trivial)});
    out += '\n';
    return out;
}

}  // namespace gallagher
