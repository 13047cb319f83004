#include "gallagher/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "gallagher/arith.hpp"
#include "gallagher/compare.hpp"
#include "gallagher/correlation.hpp"
#include "gallagher/dirichlet.hpp"
#include "gallagher/errors.hpp"
#include "gallagher/expsum.hpp"
#include "gallagher/oracles.hpp"
#include "gallagher/piecewise.hpp"
#include "gallagher/selberg.hpp"
#include "gallagher/transforms.hpp"
#include "gallagher/weights.hpp"

namespace gallagher::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

std::string fmt(const char* format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

// Collects checks; the criterion passes iff every require() held.
struct Tally {
    bool ok = true;
    std::vector<std::string> notes;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

double rel(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0 ? 0.0 : std::abs(a - b) / scale;
}

int grid_factor(const SuiteOptions& o) { return o.profile == Profile::full ? 2 : 1; }

std::uint64_t derive_seed(const SuiteOptions& o, int criterion, std::uint64_t i) {
    return o.seed * 1'000'003ULL + static_cast<std::uint64_t>(criterion) * 100'003ULL + i;
}

// Least-squares slope of log(ratio) against the doubling index.
double log_slope(const std::vector<double>& ratios) {
    const double n = static_cast<double>(ratios.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        mx += static_cast<double>(i) / n;
        my += std::log(ratios[i]) / n;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        const double dx = static_cast<double>(i) - mx;
        sxy += dx * (std::log(ratios[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

std::string join(const std::vector<double>& v) {
    std::string out;
    for (double x : v) out += (out.empty() ? "" : " ") + fmt("%.6g", x);
    return out;
}

// A doubling sweep passes when every ratio is finite and positive and the
// fitted growth of log(ratio) per doubling stays below this band.
constexpr double kTrendBand = 0.05;

void require_trend(Tally& t, const std::string& name, const std::vector<double>& ratios) {
    bool finite = true;
    for (double r : ratios) finite = finite && std::isfinite(r) && r > 0;
    t.require(finite, name + ": every ratio finite and positive");
    const double slope = finite ? log_slope(ratios) : std::numeric_limits<double>::infinity();
    t.note(fmt("%s: ratios [", name.c_str()) + join(ratios) + fmt("], log-slope per doubling %.4f", slope));
    t.require(slope <= kTrendBand, name + ": non-increasing trend");
}

std::vector<Weight> lemma_weights(double delta) {
    return {make_weight(WeightSpec{WeightFamily::unit_interval, delta, 0, 0}),
            make_weight(WeightSpec{WeightFamily::cesaro, delta, 0, 1}),
            make_weight(WeightSpec{WeightFamily::cesaro, delta, 0, 2}),
            make_weight(WeightSpec{WeightFamily::lanczos, delta, delta / 2, 0})};
}

// ---------------------------------------------------------------------------

void lemma_battery(const SuiteOptions& o, Tally& t) {
    const auto start = Clock::now();
    const int specs = 50 * grid_factor(o);
    const std::vector<double> Ts{0.02, 0.05, 0.1, 0.2, 0.3};
    std::mt19937_64 rng(derive_seed(o, 1, 0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int cases = 0, trivial = 0, violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < specs; ++i) {
        const auto terms = static_cast<std::size_t>(1 + rng() % 30);
        const double delta = 0.5 + 1.5 * unit(rng);
        const auto spec = random_expsum(terms, derive_seed(o, 1, static_cast<std::uint64_t>(i) + 1));
        for (const auto& w : lemma_weights(delta)) {
            const auto corr = self_correlation(w);
            const double w0 = std::norm(transform(w, 0));
            for (double T : Ts) {
                const double m = min_sq_on_interval(w, T).m;
                const auto r = verify_lemma(spec, corr, m, w0, T);
                ++cases;
                if (r.trivial) ++trivial;
                if (!(r.slack >= -1e-9 * r.rhs)) ++violations;
                if (r.rhs > 0) worst = std::min(worst, r.slack / r.rhs);
            }
        }
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    t.note(fmt("%d cases, %d with m = 0, worst slack/rhs %.3g, %.2f s", cases, trivial, worst, seconds));
    t.require(cases == 4 * 5 * specs, "case count");
    t.require(violations == 0, fmt("%d cases with slack < -1e-9 rhs", violations));
    t.require(seconds <= 30.0, "runtime <= 30 s");
}

void exact_vs_oracle(const SuiteOptions& o, Tally& t) {
    const int n = 20 * grid_factor(o);
    std::mt19937_64 rng(derive_seed(o, 2, 0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double e_norm = 0, e_smooth = 0, e_window = 0, e_dirichlet = 0;
    for (int i = 0; i < n; ++i) {
        const auto spec = random_expsum(10, derive_seed(o, 2, static_cast<std::uint64_t>(i) + 1));
        const double T = 0.05 + 0.45 * unit(rng);
        e_norm = std::max(e_norm, rel(norm_sq_2T(spec, T), oracle::norm_sq_quadrature(spec, T)));

        const double delta = 0.5 + 4.5 * unit(rng);
        const char* families[] = {"unit", "cesaro1", "cesaro2", "lanczos", "step"};
        const int which = i % 5;
        WeightSpec ws{WeightFamily::unit_interval, delta, 0, 0};
        if (which == 1) ws = {WeightFamily::cesaro, delta, 0, 1};
        if (which == 2) ws = {WeightFamily::cesaro, delta, 0, 2};
        if (which == 3) ws = {WeightFamily::lanczos, delta, delta * unit(rng), 0};
        if (which == 4) ws = {WeightFamily::unit_step, delta, 0, 0};
        if (ws.family == WeightFamily::lanczos && ws.Delta <= 0) ws.Delta = delta;
        const auto w = make_weight(ws);
        const double e = rel(smoothed_mean_square(spec, w), oracle::smoothed_quadrature(spec, w));
        if (e > 1e-8) t.note(fmt("smoothed mean square off by %.3g for %s", e, families[which]));
        e_smooth = std::max(e_smooth, e);

        e_window = std::max(e_window, rel(window_integral(spec, delta), oracle::window_integral_pairs(spec, delta)));

        const auto D = random_dirichlet(1, 20, derive_seed(o, 2, 1000 + static_cast<std::uint64_t>(i)));
        const double TD = 5 + 45 * unit(rng);
        e_dirichlet = std::max(e_dirichlet, rel(d_norm_sq_2T(D, TD), oracle::dirichlet_norm_quadrature(D, TD)));
    }
    t.note(fmt("%d instances each; worst relative error: norm_sq_2T %.2e, smoothed %.2e, window %.2e, "
               "dirichlet %.2e",
               n, e_norm, e_smooth, e_window, e_dirichlet));
    t.require(e_norm <= 1e-8, "norm_sq_2T vs quadrature within 1e-8");
    t.require(e_smooth <= 1e-8, "smoothed_mean_square vs quadrature within 1e-8");
    t.require(e_window <= 1e-8, "window integral vs pair overlaps within 1e-8");
    t.require(e_dirichlet <= 1e-8, "d_norm_sq_2T vs quadrature within 1e-8");
}

// Range where the transform stays comparable to its peak: a quarter of the
// main lobe for the sinc powers.
double lobe_range(const Weight& w) {
    const auto& s = w.spec();
    switch (w.family()) {
        case WeightFamily::cesaro: return s.j == 0 ? 0.25 / s.delta : std::ldexp(1.0, s.j - 2) / s.delta;
        case WeightFamily::lanczos: return 0.5 / (2 * s.delta - s.Delta);
        default: return 0.25 / s.delta;
    }
}

void transform_cross_validation(const SuiteOptions& o, Tally& t) {
    const int points = 200 * grid_factor(o);
    std::vector<double> deltas{1.3};
    if (o.profile == Profile::full) deltas.push_back(0.7);
    double worst_scaled = 0, worst_lobe = 0;
    int weights = 0;
    for (double delta : deltas) {
        std::vector<Weight> ws{make_weight(WeightSpec{WeightFamily::unit_interval, delta, 0, 0}),
                               make_weight(WeightSpec{WeightFamily::unit_step, delta, 0, 0}),
                               make_weight(WeightSpec{WeightFamily::lanczos, delta, delta / 2, 0})};
        for (int j = 0; j <= 5; ++j) ws.push_back(make_weight(WeightSpec{WeightFamily::cesaro, delta, 0, j}));
        for (const auto& w : ws) {
            ++weights;
            const double peak = std::abs(closed_form(w, 0));
            t.require(std::abs(generic_transform(w.spline(), 0) - w.spline().integral()) <= 1e-12 * peak,
                      w.label() + ": transform at 0 equals the integral");
            // Wide log grid, error against the transform's scale.
            for (int i = 0; i < points; ++i) {
                const double y = 1e-4 / delta * std::pow(64.0 / 1e-4, static_cast<double>(i) / (points - 1));
                const double e = std::abs(generic_transform(w.spline(), y) - closed_form(w, y)) / peak;
                worst_scaled = std::max(worst_scaled, e);
            }
            // Pointwise relative on the range where |w^| is comparable to its peak.
            const double Y = lobe_range(w);
            for (int i = 0; i < points; ++i) {
                const double y = Y * static_cast<double>(i) / (points - 1);
                const auto c = closed_form(w, y);
                const double e = std::abs(generic_transform(w.spline(), y) - c) / std::abs(c);
                worst_lobe = std::max(worst_lobe, e);
            }
        }
    }
    t.note(fmt("%d weights x %d frequencies x 2 grids; worst peak-scaled error %.2e, worst pointwise relative "
               "error on the main range %.2e",
               weights, points, worst_scaled, worst_lobe));
    t.require(worst_scaled <= 1e-9, "generic vs closed form within 1e-9 of the peak");
    t.require(worst_lobe <= 1e-9, "generic vs closed form within 1e-9 relative on the main range");
}

// Largest coefficient difference after re-expanding both splines on the
// common refinement of their breakpoints.
double coefficient_gap(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
    std::vector<double> cuts;
    for (double b : p.breakpoints()) cuts.push_back(b);
    for (double b : q.breakpoints()) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> merged;
    for (double c : cuts)
        if (merged.empty() || c - merged.back() > 1e-12 * std::max(1.0, std::abs(c))) merged.push_back(c);
    auto local = [](const PiecewisePolynomial& s, double a) -> std::vector<double> {
        if (a < s.lower() || a >= s.upper()) return {};
        const auto bp = s.breakpoints();
        const auto it = std::upper_bound(bp.begin(), bp.end(), a);
        const auto piece = static_cast<std::size_t>(it - bp.begin()) - 1;
        return taylor_shift(s.coefficients(piece), a - bp[piece]);
    };
    double gap = 0;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        const double mid = merged[i];
        const auto a = local(p, mid), b = local(q, mid);
        for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
            const double x = k < a.size() ? a[k] : 0.0, y = k < b.size() ? b[k] : 0.0;
            gap = std::max(gap, std::abs(x - y));
        }
    }
    const double edge = std::abs(p.lower() - q.lower()) + std::abs(p.upper() - q.upper());
    return std::max(gap, edge);
}

void spline_identities(const SuiteOptions& o, Tally& t) {
    std::vector<double> deltas{0.5, 1.0, 1.5, 2.0, 3.0};
    if (o.profile == Profile::full)
        for (double d : {0.25, 0.75, 1.25, 2.5, 4.0}) deltas.push_back(d);
    double tri = 0, cubic = 0, family = 0;
    for (double d : deltas) {
        const auto box = make_weight(WeightSpec{WeightFamily::unit_interval, d / 2, 0, 0}).spline();
        const auto C = make_weight(WeightSpec{WeightFamily::cesaro, d, 0, 1}).spline();
        tri = std::max(tri, coefficient_gap(convolve(box, box).scaled(1 / d), C));
        const auto Chalf = make_weight(WeightSpec{WeightFamily::cesaro, d / 2, 0, 1}).spline();
        const auto spline_ref = oracle::remark_cubic(d);
        cubic = std::max(cubic, coefficient_gap(convolve(Chalf, Chalf).scaled(1 / d), spline_ref));
        family = std::max(family, coefficient_gap(cesaro_family(2, d).spline(), spline_ref));
    }
    t.note(fmt("%zu values of delta; worst coefficient gap: box*box %.2e, C*C %.2e, C^(2) %.2e", deltas.size(), tri,
               cubic, family));
    t.require(tri <= 1e-12, "(1/delta) 1_{delta/2} * 1_{delta/2} = C_delta coefficient-wise");
    t.require(cubic <= 1e-12, "(1/delta) C_{delta/2} * C_{delta/2} = cubic spline coefficient-wise");
    t.require(family <= 1e-12, "cesaro_family(2) = cubic spline coefficient-wise");
}

void constant_checks(const SuiteOptions& o, Tally& t) {
    std::vector<double> products{0.1, 0.25, 0.4};
    std::vector<double> Ts{10.0};
    if (o.profile == Profile::full) Ts = {10.0, 0.7};
    double worst = 0, worst_const = 0;
    for (double T : Ts)
        for (double dT : products) {
            const double d = dT / T;
            const double unit_m = std::pow(std::sin(2 * kPi * d * T), 2) / (kPi * kPi * T * T);
            const double ces_m = std::pow(std::sin(kPi * d * T), 4) / (std::pow(kPi * T, 4) * d * d);
            const auto unit = make_weight(WeightSpec{WeightFamily::unit_interval, d, 0, 0});
            const auto ces = make_weight(WeightSpec{WeightFamily::cesaro, d, 0, 1});
            for (bool shortcut : {true, false}) {
                const MinimizerOptions opt{4096 * grid_factor(o), shortcut};
                worst = std::max(worst, rel(min_sq_on_interval(unit, T, opt).m, unit_m));
                worst = std::max(worst, rel(min_sq_on_interval(ces, T, opt).m, ces_m));
            }
            ExpSumSpec one{{0.0}, {1.0}};
            worst_const = std::max(worst_const, std::abs(cesaro_instance(one, T, dT).constant_times_m - 1));
        }
    t.note(fmt("delta T in {0.1, 0.25, 0.4}, analytic and grid paths; worst relative error in m %.2e, "
               "worst |constant * m - 1| %.2e",
               worst, worst_const));
    t.require(worst <= 1e-10, "m matches the closed minima within 1e-10");
    t.require(worst_const <= 1e-10, "Cesaro-instance constant equals 1/m within 1e-10");
}

void selberg_oracles(const SuiteOptions& o, Tally& t) {
    const long long top = 2000;
    const auto d1 = divisor_table(1, 1, 2 * top + 200);
    const auto d2 = divisor_table(2, 1, 2 * top + 200);
    const auto b2 = balanced_part(d2);
    std::vector<long long> Ns{50, 100, 333, 1000, 2000};
    std::vector<long long> hs{1, 2, 7, 16, 50};
    if (o.profile == Profile::full) {
        Ns = {50, 64, 100, 250, 333, 500, 1000, 1499, 1777, 2000};
        hs = {1, 2, 3, 7, 10, 16, 25, 31, 49, 50};
    }
    int checks = 0;
    double worst = 0;
    bool d1_zero = true;
    auto compare = [&](double lib, double brute, const std::string& what) {
        ++checks;
        // Exact up to the last bits of the long-double accumulations; an
        // exactly vanishing sum carries a floor of 1e-12 per term.
        const double e = std::abs(lib - brute) / std::max(std::abs(brute), 1.0);
        worst = std::max(worst, e);
        if (e > 1e-12) t.require(false, what + fmt(" differs by %.3g", e));
    };
    struct Named {
        const ArithFnTable* f;
        const char* name;
    };
    for (auto [f, name] : {Named{&d1, "d1"}, Named{&d2, "d2"}, Named{&b2, "balanced d2"}}) {
        auto value = [f](long long n) { return (*f)(n); };
        for (long long N : Ns)
            for (long long h : hs) {
                if (h > N) continue;
                const std::string at = fmt("%s N=%lld h=%lld", name, N, h);
                auto mean = [&](long long x) { return f->balanced() ? 0.0 : h * f->log_poly->at_log(double(x)); };
                const double J = selberg_integral(*f, N, h).value;
                compare(J, oracle::selberg_brute(value, mean, N, h), "J_f " + at);
                if (f == &d1) d1_zero = d1_zero && J == 0.0;

                const auto tri = [h](long long k) { return 1.0 - std::abs(double(k)) / double(h); };
                compare(modified_selberg_integral(*f, N, h, 1).value,
                        oracle::weighted_brute(value, tri, -h, h, mean, N), "modified j=1 " + at);

                for (const auto& w : {make_weight(WeightSpec{WeightFamily::cesaro, double(h), 0, 1}),
                                      make_weight(WeightSpec{WeightFamily::lanczos, double(h), double(h) / 2, 0}),
                                      make_weight(WeightSpec{WeightFamily::unit_interval, double(h), 0, 0})}) {
                    auto wk = [&w](long long k) { return w(double(k)); };
                    auto none = [](long long) { return 0.0; };
                    compare(weighted_selberg_integral(*f, w, N).value, oracle::weighted_brute(value, wk, -h, h, none, N),
                            "weighted " + w.label() + " " + at);
                }
                if (f->balanced()) {
                    auto none = [](long long) { return 0.0; };
                    auto box = [](long long) { return 1.0; };
                    const double j0 = modified_selberg_integral(*f, N, h, 0).value;
                    compare(j0, oracle::weighted_brute(value, box, -h, h, none, N), "j=0 " + at);
                    compare(j0, box_selberg_integral(*f, N, h).value, "j=0 vs box " + at);
                    const auto C2 = cesaro_family(2, double(h));
                    auto c2 = [&C2](long long k) { return C2(double(k)); };
                    compare(modified_selberg_integral(*f, N, h, 2).value,
                            oracle::weighted_brute(value, c2, -h, h, none, N), "j=2 " + at);
                }
            }
    }
    t.note(fmt("%d comparisons over N <= %lld, h <= %lld; worst relative difference %.2e", checks, top,
               hs.back(), worst));
    t.require(d1_zero, "J_{d1}(N, h) = 0 exactly");
}

void dft_identity(const SuiteOptions& o, Tally& t) {
    const long long N = 10000;
    std::vector<long long> Hs{8, 16, 32};
    if (o.profile == Profile::full) Hs = {8, 16, 32, 64, 128, 256};
    const auto b2 = balanced_part(divisor_table(2, 1, 2 * N + 4 * Hs.back()));
    double worst_identity = 0;
    std::vector<double> normalized;
    for (long long H : Hs) {
        const double Hd = static_cast<double>(H);
        for (const auto& w : {make_weight(WeightSpec{WeightFamily::cesaro, Hd, 0, 1}),
                              make_weight(WeightSpec{WeightFamily::cesaro, Hd, 0, 2}),
                              make_weight(WeightSpec{WeightFamily::unit_interval, Hd, 0, 0}),
                              make_weight(WeightSpec{WeightFamily::unit_step, Hd, 0, 0})}) {
            const auto r = dft_identity_check(b2, w, N, H);
            worst_identity = std::max(worst_identity, r.identity_error);
            if (w.family() == WeightFamily::cesaro && w.spec().j == 1) normalized.push_back(r.normalized);
        }
    }
    t.note(fmt("balanced d2, N = %lld; worst identity error %.2e; boundary constant E/(H^3 |f|^2) for C_H over H "
               "doubling: [",
               N, worst_identity) +
           join(normalized) + "]");
    t.require(worst_identity <= 1e-9, "identity exact within 1e-9 relative");
    const double band = normalized.front();
    bool within = true;
    for (double v : normalized) within = within && std::isfinite(v) && v <= band;
    t.require(within, fmt("boundary constant stays within the band %.3g recorded at the smallest H", band));
}

void g_theta_and_measure(const SuiteOptions& o, Tally& t) {
    const auto rep = g_theta_properties({0.1, 0.25, 0.4}, -5, 5, 2001 * grid_factor(o));
    t.note(fmt("G_theta properties even/increasing/limit/theta-monotone/theta-limits/zeros/poles: %d %d %d %d %d %d %d", rep.even, rep.increasing, rep.limit_zero,
               rep.increasing_in_theta, rep.theta_limits, rep.zeros, rep.poles));
    t.require(rep.all(), "all seven G_theta properties");

    const double T = 10;
    ScanOptions scan;
    scan.y_max = 40 * T;
    scan.points = (1 << 14) * grid_factor(o);
    std::vector<double> measures;
    bool almost = true;
    for (double dT : {0.30, 0.40, 0.45, 0.49}) {
        const double d = dT / T;
        const auto r = is_T_better(make_weight(WeightSpec{WeightFamily::cesaro, d, 0, 1}),
                                   make_weight(WeightSpec{WeightFamily::unit_interval, d, 0, 0}), T, scan);
        almost = almost && r.verdict == Verdict::almost_T_better;
        measures.push_back(r.violation_measure);
    }
    t.note("violation measure of C_delta vs 1_delta at delta T = 0.30, 0.40, 0.45, 0.49 (T = 10, |y| <= 40T): [" +
           join(measures) + "]");
    t.require(almost, "every verdict almost_T_better");
    bool decreasing = true;
    for (std::size_t i = 1; i < measures.size(); ++i) decreasing = decreasing && measures[i] < measures[i - 1];
    t.require(decreasing, "violation measure strictly decreasing");
}

void ratio_sweeps(const SuiteOptions& o, Tally& t) {
    const int g = grid_factor(o);
    // Smoothed Dirichlet bound: T doubling, random D on [1, 20].
    for (int s = 0; s < 4 * g; ++s) {
        const auto D = random_dirichlet(1, 20, derive_seed(o, 9, static_cast<std::uint64_t>(s)));
        std::vector<double> r;
        for (double T = 100.0 * g; r.size() < 4; T *= 2) r.push_back(theorem1_row(D, T).ratio);
        require_trend(t, fmt("Dirichlet bound, seed %d, T doubling from %d", s, 100 * g), r);
    }

    const long long N0 = 100000 * g;
    const auto d2 = divisor_table(2, 1, 8 * N0 * 2 + 400);
    const auto b2 = balanced_part(d2);

    // Modified length inertia: N doubling at h = 10, H = 40.
    {
        std::vector<double> r;
        for (long long N = N0; r.size() < 4; N *= 2) r.push_back(length_inertia_check(b2, N, 10, 40).modified_ratio);
        require_trend(t, fmt("modified length inertia, balanced d2, h=10, H=40, N doubling from %lld", N0), r);
    }
    // Both length-inertia displays: H doubling at N0, h = 10.
    {
        std::vector<double> orig, mod;
        for (long long H = 20; orig.size() < 4; H *= 2) {
            const auto rep = length_inertia_check(b2, N0, 10, H);
            orig.push_back(rep.original_ratio);
            mod.push_back(rep.modified_ratio);
        }
        require_trend(t, fmt("length inertia, balanced d2, N=%lld, h=10, H doubling from 20", N0), orig);
        require_trend(t, fmt("modified length inertia, balanced d2, N=%lld, h=10, H doubling from 20", N0), mod);
    }
    // Recorded only: the original display along N doubling approaches its
    // limit from below (the H^3 tail does not grow with N).
    {
        std::vector<double> r;
        for (long long N = N0; r.size() < 4; N *= 2) r.push_back(length_inertia_check(b2, N, 10, 40).original_ratio);
        t.note(fmt("recorded: length inertia, h=10, H=40, N doubling from %lld: [", N0) + join(r) +
               fmt("], log-slope %.4f", log_slope(r)));
    }
    // Mean-value removal bound: N doubling at delta = 20; the delta sweep is recorded.
    {
        const auto w = make_weight(WeightSpec{WeightFamily::cesaro, 20, 0, 1});
        std::vector<double> r;
        for (long long N = 10000 * g; r.size() < 4; N *= 2) r.push_back(proposition1_check(d2, w, N).ratio);
        require_trend(t, fmt("mean-value removal, d2, C_20, N doubling from %d", 10000 * g), r);
        std::vector<double> by_delta;
        for (double delta : {10.0, 20.0, 40.0, 80.0})
            by_delta.push_back(
                proposition1_check(d2, make_weight(WeightSpec{WeightFamily::cesaro, delta, 0, 1}), 10000).ratio);
        t.note("recorded: mean-value removal, d2, N=10000, delta = 10, 20, 40, 80: [" + join(by_delta) + "]");
    }
}

void divisor_gate(const SuiteOptions& o, Tally& t) {
    const long long top = 10000 * grid_factor(o);
    int mismatches = 0;
    for (int k = 1; k <= 3; ++k) {
        const auto table = divisor_table(k, 1, top);
        for (long long n = 1; n <= top; ++n)
            if (table(n) != static_cast<double>(oracle::divisor_count(k, n))) ++mismatches;
        t.require(k == 1 || table.log_poly.has_value(), fmt("d%d carries its log polynomial", k));
    }
    t.require(mismatches == 0, fmt("sieve equals enumeration for n <= %lld, k <= 3 (%d mismatches)", top, mismatches));
    for (int k : {2, 3}) {
        const auto& gate = fit_gate_cached(k);
        t.note(fmt("fit gate d%d: worst relative coefficient error %.2e", k, gate.worst_relative));
        t.require(gate.passed && gate.worst_relative < 0.01, fmt("d%d fit gate < 1%%", k));
    }
    const auto Q2 = summatory_polynomial(log_polynomial_dk(2));
    t.require(std::abs(Q2.coefficients.at(1) - 1) < 1e-15 && std::abs(Q2.coefficients.at(0) - (2 * kEulerGamma - 1)) < 1e-15,
              "summatory d2 polynomial is u + 2 gamma - 1");
    t.require(std::abs(log_polynomial_dk(3).coefficients.at(2) - 0.5) < 1e-15, "d3 leading coefficient 1/2");
}

struct Entry {
    const char* title;
    void (*run)(const SuiteOptions&, Tally&);
};

constexpr Entry kEntries[kCriteria] = {
    {"lemma battery", lemma_battery},
    {"exact vs oracle", exact_vs_oracle},
    {"transform cross-validation", transform_cross_validation},
    {"spline identities", spline_identities},
    {"constant checks", constant_checks},
    {"Selberg oracles", selberg_oracles},
    {"DFT identity", dft_identity},
    {"G_theta and violation measure", g_theta_and_measure},
    {"ratio sweeps", ratio_sweeps},
    {"divisor-function gate", divisor_gate},
};

}  // namespace

Profile parse_profile(std::string_view text) {
    if (text == "quick") return Profile::quick;
    if (text == "full") return Profile::full;
    throw ParameterDomainError("profile must be quick or full, got '" + std::string(text) + "'");
}

std::string to_string(Profile profile) { return profile == Profile::full ? "full" : "quick"; }

CriterionResult run_criterion(int id, const SuiteOptions& options) {
    if (id < 1 || id > kCriteria) throw ParameterDomainError(fmt("no criterion %d", id));
    const auto& entry = kEntries[id - 1];
    CriterionResult result;
    result.id = id;
    result.title = entry.title;
    Tally tally;
    const auto start = Clock::now();
    try {
        entry.run(options, tally);
    } catch (const ResourceError&) {
        throw;
    } catch (const std::exception& e) {
        tally.require(false, std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.passed = tally.ok;
    result.notes = std::move(tally.notes);
    return result;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options,
                                       const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) {
        out.push_back(run_criterion(id, options));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string summary_line(const CriterionResult& r) {
    return fmt("criterion %2d  %s  %-30s [%.2f s]", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(), r.seconds);
}

}  // namespace gallagher::acceptance
