#include "gallagher/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gallagher/csv.hpp"
#include "gallagher/errors.hpp"
#include "gallagher/parallel.hpp"

namespace gallagher {

namespace {

using Real = long double;
using CReal = std::complex<Real>;
constexpr Real kPi = std::numbers::pi_v<long double>;

// e(-a) = exp(-2 pi i a), with the argument reduced mod 1 first.
CReal unit_phase(Real a) {
    const Real frac = a - std::nearbyint(a);
    const Real angle = -2 * kPi * frac;
    return {std::cos(angle), std::sin(angle)};
}

// integral_0^h sum_m c_m s^m e^{-i omega s} ds, valid for |omega h| <= ~1.
CReal piece_series(const std::vector<Real>& c, Real h, Real omega) {
    const Real theta = omega * h;
    // t_n = (-i theta)^n / n!
    constexpr int kMaxTerms = 40;
    CReal t[kMaxTerms];
    int terms = 1;
    t[0] = 1;
    for (; terms < kMaxTerms; ++terms) {
        t[terms] = t[terms - 1] * CReal(0, -theta) / static_cast<Real>(terms);
        if (std::abs(t[terms]) < 1e-22L) {
            ++terms;
            break;
        }
    }
    CReal total = 0;
    Real hp = h;
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m] != 0) {
            CReal e = 0;
            for (int n = terms - 1; n >= 0; --n) e += t[n] / static_cast<Real>(m + n + 1);
            total += c[m] * hp * e;
        }
        hp *= h;
    }
    return total;
}

void shift_ld(std::vector<Real>& c, Real h) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) c[j] += h * c[j + 1];
}

double int_pow(double base, long long exponent) {
    double result = 1.0;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

}  // namespace

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    if (std::abs(px) < 1e-4) {
        const double p2 = px * px;
        return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
    }
    return std::sin(px) / px;
}

std::complex<double> closed_form(const Weight& w, double y) {
    const auto& s = w.spec();
    switch (w.transform_kind()) {
        case TransformKind::unit_interval: return 2.0 * s.delta * sinc(2.0 * s.delta * y);
        case TransformKind::unit_step: {
            const auto phase = unit_phase(static_cast<Real>(s.delta) * y / 2);
            return std::complex<double>(phase) * (s.delta * sinc(s.delta * y));
        }
        case TransformKind::cesaro: {
            const long long power = 1LL << s.j;  // 2^j
            const double scale = std::ldexp(4.0 * s.delta, -static_cast<int>(power));
            return scale * int_pow(sinc(s.delta * y / std::ldexp(1.0, s.j - 1)), power);
        }
        case TransformKind::lanczos: {
            const double wide = 2.0 * s.delta - s.Delta;
            return wide * sinc(s.Delta * y) * sinc(wide * y);
        }
        case TransformKind::generic: break;
    }
    throw UnsupportedError("no closed-form transform for weight '" + w.label() + "'; use generic_transform");
}

std::complex<double> generic_transform(const PiecewisePolynomial& p, double y) {
    const Real omega = 2 * kPi * static_cast<Real>(y);
    const auto bps = p.breakpoints();
    CReal total = 0;
    for (std::size_t i = 0; i < p.piece_count(); ++i) {
        const Real width = p.piece_width(i);
        const auto& raw = p.coefficients(i);
        std::vector<Real> c(raw.begin(), raw.end());
        const Real theta = std::abs(omega * width);
        const long long subs = std::max<long long>(1, static_cast<long long>(std::ceil(theta)));
        const Real h = width / static_cast<Real>(subs);
        for (long long k = 0; k < subs; ++k) {
            if (k) shift_ld(c, h);  // re-expand at the next sub-piece start
            const Real start = static_cast<Real>(bps[i]) + h * static_cast<Real>(k);
            total += unit_phase(start * static_cast<Real>(y)) * piece_series(c, h, omega);
        }
    }
    return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

std::complex<double> transform(const Weight& w, double y) {
    if (w.transform_kind() == TransformKind::generic) return generic_transform(w.spline(), y);
    return closed_form(w, y);
}

double monotone_radius(const Weight& w) {
    const auto& s = w.spec();
    switch (w.transform_kind()) {
        case TransformKind::unit_interval: return 1.0 / (2.0 * s.delta);
        case TransformKind::unit_step: return 1.0 / s.delta;
        case TransformKind::cesaro: return std::ldexp(1.0, s.j - 1) / s.delta;
        case TransformKind::lanczos: return 1.0 / (2.0 * s.delta - s.Delta);
        case TransformKind::generic: return 0.0;
    }
    return 0.0;
}

IntervalMin min_sq_on_interval(const Weight& w, double T, const MinimizerOptions& options) {
    if (!(T > 0) || !std::isfinite(T)) throw ParameterDomainError("T must be a positive real");
    auto magnitude = [&](double t) { return std::abs(transform(w, t)); };

    // |w^| is even for real weights, so [0, T] suffices.
    if (options.allow_analytic_shortcut && T < monotone_radius(w)) {
        const double v = magnitude(T);
        return {T, T, v * v, true};
    }

    const double width = w.spline().upper() - w.spline().lower();
    const long long n = std::max<long long>(options.base_points, static_cast<long long>(std::ceil(64.0 * T * width)));
    std::vector<double> grid(static_cast<std::size_t>(n) + 1);
    parallel_for(grid.size(), [&](std::size_t i) { grid[i] = magnitude(T * static_cast<double>(i) / n); });

    double best_t = 0, best = grid[0];
    auto consider = [&](double t, double v) {
        if (v < best || (v == best && t < best_t)) {
            best = v;
            best_t = t;
        }
    };
    consider(T, grid.back());
    const double step = T / static_cast<double>(n);
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (!(grid[i] <= grid[i - 1] && grid[i] <= grid[i + 1])) continue;
        // Golden-section refinement on the bracket around a grid minimum.
        constexpr double kInvPhi = 0.6180339887498949;
        double a = step * static_cast<double>(i - 1), b = step * static_cast<double>(i + 1);
        double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
        double fc = magnitude(c), fd = magnitude(d);
        for (int it = 0; it < 200 && (b - a) > 4e-16 * std::max(1.0, T); ++it) {
            if (fc <= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - kInvPhi * (b - a);
                fc = magnitude(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + kInvPhi * (b - a);
                fd = magnitude(d);
            }
        }
        consider(step * static_cast<double>(i), grid[i]);
        consider(c, fc);
        consider(d, fd);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) consider(step * static_cast<double>(i), grid[i]);
    return {T, best_t, best * best, false};
}

std::vector<double> FrequencyGrid::points() const {
    std::vector<double> pts;
    if (n <= 1) return {lo};
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(lo + (hi - lo) * i / (n - 1));
    return pts;
}

FrequencyGrid parse_frequency_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (second == std::string::npos) throw ParameterDomainError("frequency grid must look like lo:hi:n");
    FrequencyGrid g;
    g.lo = csv::parse_double(text.substr(0, first), "grid lo");
    g.hi = csv::parse_double(text.substr(first + 1, second - first - 1), "grid hi");
    const auto n = csv::parse_int(text.substr(second + 1), "grid n");
    if (n < 1 || n > 10'000'000) throw ParameterDomainError("grid point count out of range");
    if (!(g.hi >= g.lo)) throw ParameterDomainError("grid hi must be >= lo");
    g.n = static_cast<int>(n);
    return g;
}

std::string transform_csv(const Weight& w, const FrequencyGrid& grid) {
    const auto ys = grid.points();
    std::vector<double> mags(ys.size());
    parallel_for(ys.size(), [&](std::size_t i) { mags[i] = std::abs(transform(w, ys[i])); });
    std::string out = "y,abs,abs_sq\n";
    for (std::size_t i = 0; i < ys.size(); ++i)
        out += csv::row({csv::format(ys[i]), csv::format(mags[i]), csv::format(mags[i] * mags[i])}) + "\n";
    return out;
}

}  // namespace gallagher
