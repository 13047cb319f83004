#include "gallagher/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gallagher/csv.hpp"
#include "gallagher/errors.hpp"
#include "gallagher/parallel.hpp"
#include "gallagher/transforms.hpp"

namespace gallagher {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double sq_abs(const Weight& w, double y) { return std::norm(transform(w, y)); }

double zero_scale(const Weight& w) {
    const double r = monotone_radius(w);
    return r > 0 ? r : 1.0 / w.support_radius();
}

struct Pair {
    double v_sq;
    double w_sq;
};

// Transforms are accurate to this fraction of their value at 0 (absolute),
// so |w^|^2 carries an error of about 2 |w^| kTransformAbs |w^(0)|.
constexpr double kTransformAbs = 1e-12;

struct Scales {
    double r, m;
    double v_floor, w_floor;  // below both, the point is removable
    double v_peak, w_peak;    // |v^(0)|, |w^(0)|
};

// Violation of |v^|^2 / |w^|^2 <= r / m, in product form so that zeros of w^
// need no division.
bool violates(const Pair& p, const Scales& s) {
    if (p.v_sq <= s.v_floor && p.w_sq <= s.w_floor) return false;
    const double left = p.v_sq * s.m, right = s.r * p.w_sq;
    const double noise = 2 * kTransformAbs * (s.m * std::sqrt(p.v_sq) * s.v_peak + s.r * std::sqrt(p.w_sq) * s.w_peak);
    return left - right > 1e-12 * (left + right) + noise;
}

double ratio_of(const Pair& p) {
    if (p.w_sq == 0) return p.v_sq == 0 ? 0.0 : kInf;
    return p.v_sq / p.w_sq;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::T_better: return "T_better";
        case Verdict::almost_T_better: return "almost_T_better";
        case Verdict::not_T_better: return "not_T_better";
    }
    return "unknown";
}

ScanOptions parse_scan_options(const std::string& text) {
    ScanOptions o;
    if (text.empty()) return o;
    for (const auto& item : csv::split(text)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParameterDomainError("scan options look like ymax=..,n=..");
        const auto key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "ymax") {
            o.y_max = csv::parse_double(value, "ymax");
            if (!(o.y_max > 0)) throw ParameterDomainError("ymax must be positive");
        } else if (key == "n") {
            const auto n = csv::parse_int(value, "n");
            if (n < 16 || n > (1 << 24)) throw ParameterDomainError("scan n must lie in [16, 2^24]");
            o.points = static_cast<int>(n);
        } else {
            throw ParameterDomainError("unknown scan option '" + key + "'");
        }
    }
    return o;
}

ComparisonReport is_T_better(const Weight& v, const Weight& w, double T, const ScanOptions& scan) {
    if (!(T > 0) || !std::isfinite(T)) throw ParameterDomainError("T must be a positive real");
    if (!v.is_even() || !w.is_even())
        throw PreconditionError("is_T_better scans y >= 0 only and needs even weights");
    ComparisonReport rep;
    rep.v_label = v.label();
    rep.w_label = w.label();
    rep.T = T;
    rep.r = min_sq_on_interval(v, T).m;
    rep.m = min_sq_on_interval(w, T).m;
    const double v0 = sq_abs(v, 0.0), w0 = sq_abs(w, 0.0);
    if (!(rep.m > 1e-24 * w0)) throw PreconditionError("min |w^|^2 on [-T, T] vanishes for '" + w.label() + "'");
    if (!(rep.r > 1e-24 * v0)) throw PreconditionError("min |v^|^2 on [-T, T] vanishes for '" + v.label() + "'");
    rep.ratio_threshold = rep.r / rep.m;
    rep.gain_bound = (w0 / rep.m - 1) * v0 / rep.r;
    rep.y_max = scan.y_max > 0 ? scan.y_max : 8 * std::max({T, zero_scale(v), zero_scale(w)});
    const Scales scales{rep.r, rep.m, 1e-28 * v0, 1e-28 * w0, std::sqrt(v0), std::sqrt(w0)};

    const int n = std::max(16, scan.points);
    const double step = rep.y_max / n;
    std::vector<Pair> grid(static_cast<std::size_t>(n) + 1);
    parallel_for(grid.size(), [&](std::size_t i) {
        const double y = step * static_cast<double>(i);
        grid[i] = {sq_abs(v, y), sq_abs(w, y)};
    });

    std::size_t beyond = 0, beyond_bad = 0;
    rep.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double y = step * static_cast<double>(i);
        const bool bad = violates(grid[i], scales);
        rep.rows.push_back({y, ratio_of(grid[i]), bad});
        if (y > T) {
            ++beyond;
            beyond_bad += bad;
        }
        if (bad) {
            rep.violation_set.push_back(y);
            rep.violation_within_T = rep.violation_within_T || y <= T;
        }
    }
    rep.violation_measure = beyond ? static_cast<double>(beyond_bad) / static_cast<double>(beyond) : 0.0;

    if (scan.refine) {
        // Locate each local minimum of |w^| by golden section and probe next to it.
        constexpr double kInvPhi = 0.6180339887498949;
        for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
            if (!(grid[i].w_sq <= grid[i - 1].w_sq && grid[i].w_sq <= grid[i + 1].w_sq)) continue;
            double a = step * static_cast<double>(i - 1), b = step * static_cast<double>(i + 1);
            for (int it = 0; it < 120 && b - a > 1e-15 * b; ++it) {
                const double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
                if (sq_abs(w, c) <= sq_abs(w, d)) b = d;
                else a = c;
            }
            const double y0 = 0.5 * (a + b);
            for (double off : {0.0, 1e-3 * step, -1e-3 * step, 1e-6 * step, -1e-6 * step}) {
                const double y = y0 + off;
                if (y < 0) continue;
                if (violates({sq_abs(v, y), sq_abs(w, y)}, scales)) {
                    rep.violation_set.push_back(y);
                    rep.violation_within_T = rep.violation_within_T || y <= T;
                }
            }
        }
        std::sort(rep.violation_set.begin(), rep.violation_set.end());
    }

    if (rep.violation_within_T) rep.verdict = Verdict::not_T_better;
    else if (!rep.violation_set.empty()) rep.verdict = Verdict::almost_T_better;
    else rep.verdict = Verdict::T_better;
    return rep;
}

double gain_bound(const Weight& w, const Weight& v, double T) {
    const double m = min_sq_on_interval(w, T).m, r = min_sq_on_interval(v, T).m;
    if (!(m > 0) || !(r > 0)) throw PreconditionError("gain_bound needs nonzero interval minima");
    return (sq_abs(w, 0.0) / m - 1) * sq_abs(v, 0.0) / r;
}

double pointwise_gain_max(const Weight& w, const Weight& v, double T, int points) {
    const double m = min_sq_on_interval(w, T).m, r = min_sq_on_interval(v, T).m;
    if (!(m > 0) || !(r > 0)) throw PreconditionError("pointwise gain needs nonzero interval minima");
    std::vector<double> gains(static_cast<std::size_t>(points) + 1);
    parallel_for(gains.size(), [&](std::size_t i) {
        const double y = T * static_cast<double>(i) / points;
        gains[i] = sq_abs(w, y) / m - sq_abs(v, y) / r;
    });
    return *std::max_element(gains.begin(), gains.end());
}

double g_theta(double theta, double x) {
    // |theta| |x| keeps both evenness properties bit-exact.
    const long double t = static_cast<long double>(std::abs(theta)) * std::abs(x);
    if (t == 0) return 0.25;
    const long double frac = t - std::nearbyint(t);
    if (std::abs(frac) == 0.5L) return kInf;
    const long double tn = std::tan(std::numbers::pi_v<long double> * frac);
    const long double den = 2 * std::numbers::pi_v<long double> * t;
    return static_cast<double>(tn * tn / (den * den));
}

GThetaReport g_theta_properties(const std::vector<double>& thetas, double x_lo, double x_hi, int x_points) {
    if (thetas.empty() || x_points < 2 || !(x_hi > x_lo)) throw ParameterDomainError("empty property grid");
    for (double th : thetas)
        if (!(th > 0 && th < 0.5)) throw ParameterDomainError("theta must lie in (0, 1/2)");
    GThetaReport rep;
    std::vector<double> xs(static_cast<std::size_t>(x_points));
    for (int i = 0; i < x_points; ++i) xs[static_cast<std::size_t>(i)] = x_lo + (x_hi - x_lo) * i / (x_points - 1);

    rep.even = true;
    for (double th : thetas)
        for (double x : xs) {
            const double g = g_theta(th, x);
            rep.even = rep.even && g == g_theta(th, -x) && g == g_theta(-th, x) && g == g_theta(-th, -x);
        }

    rep.increasing = true;
    for (double th : thetas) {
        double prev = g_theta(th, 1e-9);
        for (int i = 1; i <= 4096; ++i) {
            const double g = g_theta(th, i / 4096.0);
            rep.increasing = rep.increasing && g > prev;
            prev = g;
        }
    }

    rep.limit_zero = true;
    for (double th : thetas) rep.limit_zero = rep.limit_zero && std::abs(g_theta(th, 1e-6) - 0.25) <= 1e-6;

    rep.increasing_in_theta = true;
    {
        std::vector<double> grid = thetas;
        for (int i = 1; i < 500; ++i) grid.push_back(0.5 * i / 500.0);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        for (std::size_t i = 1; i < grid.size(); ++i)
            rep.increasing_in_theta = rep.increasing_in_theta && g_theta(grid[i], 1) > g_theta(grid[i - 1], 1);
    }

    {
        bool down = std::abs(g_theta(1e-6, 1) - 0.25) <= 1e-6;
        double prev = 0;
        bool up = true;
        for (int k = 1; k <= 9; ++k) {
            const double g = g_theta(0.5 - std::pow(10.0, -k), 1);
            up = up && g > prev;
            prev = g;
        }
        rep.theta_limits = down && up && prev > 1e6;
    }

    rep.zeros = true;
    rep.poles = true;
    for (double th : thetas) {
        const double reach = std::max(std::abs(x_lo), std::abs(x_hi));
        for (long long k = 1; k / th <= reach; ++k) {
            rep.zeros = rep.zeros && g_theta(th, k / th) < 1e-12 && g_theta(th, -k / th) < 1e-12;
        }
        for (double x : xs) {
            const double t = std::abs(th * x);
            const bool at_zero = x != 0 && std::abs(t - std::nearbyint(t)) < 1e-9 && std::nearbyint(t) != 0;
            if (!at_zero) rep.zeros = rep.zeros && g_theta(th, x) > 0;
        }
        for (long long k = 0; (2 * k + 1) / (2 * th) <= reach; ++k) {
            const double pole = (2 * k + 1) / (2 * th);
            for (double side : {-1e-6, 1e-6})
                rep.poles = rep.poles && g_theta(th, pole + side) > 1e6 && g_theta(th, -pole - side) > 1e6;
        }
    }
    return rep;
}

double cesaro_ratio(int j, double theta, double x) {
    if (j < 0) throw ParameterDomainError("j must be nonnegative");
    const double g = g_theta(theta, x);
    return std::pow(g, std::ldexp(1.0, j));
}

double lanczos_tangent_form(double delta, double Delta, double y) {
    if (y == 0) {
        const double q = 2 * delta / (2 * delta - Delta);
        return q * q;
    }
    const double a = Delta * kPi * y;
    const double term = a / std::tan((2 * delta - Delta) * kPi * y) + a / std::tan(a);
    return term * term;
}

LanczosComparison lanczos_comparison(double delta, double Delta, double T, const ScanOptions& scan) {
    if (!(T > 0) || !(Delta > 0) || !(Delta <= delta) || !(delta * T < 0.5))
        throw ParameterDomainError("Lanczos comparison needs 0 < Delta T <= delta T < 1/2");
    const auto unit = make_weight(WeightSpec{WeightFamily::unit_interval, delta, 0, 0});
    const auto lanczos = make_weight(WeightSpec{WeightFamily::lanczos, delta, Delta, 0});
    const auto cesaro = make_weight(WeightSpec{WeightFamily::cesaro, delta, 0, 1});
    LanczosComparison out{is_T_better(lanczos, unit, T, scan), is_T_better(cesaro, lanczos, T, scan), 0};
    // Cross-check the tangent form against the transform quotient away from zeros.
    const double y_max = out.lanczos_vs_unit.y_max;
    for (int i = 1; i <= 2000; ++i) {
        const double y = y_max * i / 2000.0;
        const double s1 = std::sin(kPi * Delta * y), s2 = std::sin(kPi * (2 * delta - Delta) * y);
        const double s3 = std::sin(2 * kPi * delta * y);
        if (std::abs(s1) < 1e-3 || std::abs(s2) < 1e-3 || std::abs(s3) < 1e-3) continue;
        const double quotient = std::norm(closed_form(unit, y)) / std::norm(closed_form(lanczos, y));
        const double tangent = lanczos_tangent_form(delta, Delta, y);
        out.tangent_form_max_rel = std::max(out.tangent_form_max_rel, std::abs(tangent - quotient) / quotient);
    }
    return out;
}

std::string comparison_csv(const ComparisonReport& report) {
    std::string out = "y,ratio,threshold,violation\n";
    for (const auto& row : report.rows) {
        out += csv::row({csv::format(row.y), csv::format(row.ratio), csv::format(report.ratio_threshold),
                         csv::format(row.violation)});
        out += '\n';
    }
    return out;
}

}  // namespace gallagher
