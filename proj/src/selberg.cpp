#include "gallagher/selberg.hpp"

#include <cmath>

#include "gallagher/correlation.hpp"
#include "gallagher/errors.hpp"
#include "gallagher/kernels.hpp"
#include "gallagher/parallel.hpp"

namespace gallagher {

namespace {

using Real = long double;

void require_Nh(long long N, long long h) {
    if (N < 1) throw ParameterDomainError("N must be a positive integer");
    if (h < 1) throw ParameterDomainError("h must be a positive integer");
}

// sum_{x~N} g(x)^2 with g evaluated per x (parallel, ordered reduction).
template <class PerX>
double sum_over_x(long long N, PerX&& g) {
    std::vector<double> sq(static_cast<std::size_t>(N));
    parallel_for(sq.size(), [&](std::size_t i) {
        const Real v = g(N + 1 + static_cast<long long>(i));
        sq[i] = static_cast<double>(v * v);
    });
    return kernels::ordered_sum(sq);
}

// F(m) = sum_{lo <= n <= m} f(n), zero below the table.
struct Prefix {
    long long lo;
    std::vector<Real> s;  // s[i] = F(lo - 1 + i)
    explicit Prefix(const ArithFnTable& f) : lo(f.lo), s(f.values.size() + 1, 0) {
        for (std::size_t i = 0; i < f.values.size(); ++i) s[i + 1] = s[i] + f.values[i];
    }
    Prefix(long long lo_, std::vector<Real> s_) : lo(lo_), s(std::move(s_)) {}
    Real operator()(long long m) const { return m < lo ? 0 : s[static_cast<std::size_t>(m - lo + 1)]; }
    Prefix accumulated() const {
        std::vector<Real> t(s.size(), 0);
        for (std::size_t i = 1; i < s.size(); ++i) t[i] = t[i - 1] + s[i];
        return {lo, std::move(t)};
    }
};

// f values on [a, b] as a dense array (table coverage already checked).
std::vector<double> slice(const ArithFnTable& f, long long a, long long b) {
    return {f.values.begin() + (a - f.lo), f.values.begin() + (b - f.lo + 1)};
}

// out[i] = sum_k w(k) f(N + 1 + i + k) for x = N + 1 + i.
std::vector<double> weighted_windows(const ArithFnTable& f, const SampledWeight& w, long long N, const char* what) {
    const long long first = N + 1 + w.offset;
    const long long last = 2 * N + w.offset + static_cast<long long>(w.values.size()) - 1;
    f.require(first, last, what);
    const auto data = slice(f, first, last);
    std::vector<double> out(static_cast<std::size_t>(N));
    kernels::window_sums(data, 0, w.values, out);
    return out;
}

}  // namespace

std::string to_string(SelbergKind kind) {
    switch (kind) {
        case SelbergKind::original: return "original";
        case SelbergKind::modified: return "modified";
        case SelbergKind::jth: return "jth";
        case SelbergKind::weighted: return "weighted";
        case SelbergKind::box: return "box";
    }
    return "unknown";
}

double mean_value(const ArithFnTable& f, double x, double h) {
    return f.balanced() ? 0.0 : h * f.log_poly->at_log(x);
}

SelbergResult selberg_integral(const ArithFnTable& f, long long N, long long h) {
    require_Nh(N, h);
    f.require(N + 1, 2 * N + h, "selberg_integral");
    const Prefix F(f);
    const double value = sum_over_x(N, [&](long long x) {
        return F(x + h) - F(x) - static_cast<Real>(mean_value(f, static_cast<double>(x), static_cast<double>(h)));
    });
    return {N, h, -1, SelbergKind::original, value};
}

SelbergResult box_selberg_integral(const ArithFnTable& f, long long N, long long h) {
    require_Nh(N, h);
    f.require(N + 1 - h, 2 * N + h, "box_selberg_integral");
    const Prefix F(f);
    const double value = sum_over_x(N, [&](long long x) {
        const double m = mean_value(f, static_cast<double>(x), static_cast<double>(2 * h + 1));
        return F(x + h) - F(x - h - 1) - static_cast<Real>(m);
    });
    return {N, h, 0, SelbergKind::box, value};
}

SelbergResult modified_selberg_integral(const ArithFnTable& f, long long N, long long h, int j) {
    require_Nh(N, h);
    if (j < 0) throw ParameterDomainError("j must be a nonnegative integer");
    if (j == 1) {
        // sum_{|k|<h} (h - |k|) f(x + k) = S2(x+h-1) - 2 S2(x-1) + S2(x-h-1), S2 the
        // twice-accumulated prefix sum; f vanishes below the table in S2.
        f.require(N + 2 - h, 2 * N + h - 1, "modified_selberg_integral");
        const Prefix S2 = Prefix(f).accumulated();
        const double value = sum_over_x(N, [&](long long x) {
            const Real tri = S2(x + h - 1) - 2 * S2(x - 1) + S2(x - h - 1);
            return tri / h - static_cast<Real>(mean_value(f, static_cast<double>(x), static_cast<double>(h)));
        });
        return {N, h, 1, SelbergKind::modified, value};
    }
    if (!f.balanced())
        throw PreconditionError("the j-th modified Selberg integral (j != 1) needs a balanced table; '" + f.name +
                                "' carries a nonzero mean");
    const auto w = sample_weight(cesaro_family(j, static_cast<double>(h)));
    const auto sums = weighted_windows(f, w, N, "modified_selberg_integral");
    return {N, h, j, SelbergKind::jth, kernels::sum_of_squares(sums)};
}

SelbergResult weighted_selberg_integral(const ArithFnTable& f, const Weight& w, long long N) {
    require_Nh(N, 1);
    const auto sampled = sample_weight(w);
    const auto sums = weighted_windows(f, sampled, N, "weighted_selberg_integral");
    const auto H = static_cast<long long>(std::llround(w.support_radius()));
    return {N, H, -1, SelbergKind::weighted, kernels::sum_of_squares(sums)};
}

DftIdentityReport dft_identity_check(const ArithFnTable& f, const Weight& w, long long N, long long H) {
    require_Nh(N, H);
    const auto sampled = sample_weight(w);
    const long long len = static_cast<long long>(sampled.values.size());
    const long long kmin = sampled.offset, kmax = sampled.offset + len - 1;
    f.require(std::min(N - H, N + 1 + kmin), std::max(2 * N + H, 2 * N + kmax), "dft_identity_check");

    DftIdentityReport r;
    r.selberg = weighted_selberg_integral(f, w, N).value;

    // f restricted to (N, 2N], every x with a nonzero window.
    const auto truncated = slice(f, N + 1, 2 * N);
    const long long xs = N + (kmax - kmin);
    std::vector<double> padded(static_cast<std::size_t>(xs + len - 1), 0.0);
    // padded[i] holds f at n = (N + 1 - kmax) + kmin + i.
    const long long base = N + 1 - kmax + kmin;
    for (long long n = N + 1; n <= 2 * N; ++n) padded[static_cast<std::size_t>(n - base)] = f(n);
    std::vector<double> sums(static_cast<std::size_t>(xs));
    kernels::window_sums(padded, 0, sampled.values, sums);
    r.full = kernels::sum_of_squares(sums);

    const auto table = autocorrelation(IntWeight::from_real(sampled.offset, sampled.values));
    std::vector<double> corr(table.values.size());
    for (std::size_t i = 0; i < corr.size(); ++i) corr[i] = table.values[i].real();
    r.correlation = kernels::toeplitz_form(truncated, corr);

    r.identity_error = std::abs(r.full - r.correlation) / std::max(std::abs(r.correlation), 1e-300);
    r.boundary_error = std::abs(r.selberg - r.correlation);
    r.sup_f = f.sup_norm(N - H, 2 * N + H);
    const double scale = std::pow(static_cast<double>(H), 3) * r.sup_f * r.sup_f;
    r.normalized = scale > 0 ? r.boundary_error / scale : 0.0;
    return r;
}

Proposition1Report proposition1_check(const ArithFnTable& f, const Weight& w, long long N) {
    if (!f.log_poly) throw PreconditionError("proposition1_check: table '" + f.name + "' has no log polynomial");
    require_Nh(N, 1);
    const auto sampled = sample_weight(w);
    const auto a = weighted_windows(f, sampled, N, "proposition1_check");
    // sum_n w(n - x), summed exactly as the f-windows are, so f = 1 cancels to 0.
    const std::vector<double> unit(sampled.values.size(), 1.0);
    double mass = 0;
    kernels::window_sums(unit, 0, sampled.values, std::span<double>(&mass, 1));
    const auto& p = *f.log_poly;

    Proposition1Report r;
    std::vector<double> sq(a.size());
    parallel_for(a.size(), [&](std::size_t i) {
        const double x = static_cast<double>(N + 1 + static_cast<long long>(i));
        const double d = a[i] - p.at_log(x) * mass;
        sq[i] = d * d;
    });
    r.lhs = kernels::ordered_sum(sq);
    r.balanced_term = kernels::sum_of_squares(weighted_windows(balanced_part(f), sampled, N, "proposition1_check"));
    if (!p.is_zero()) {
        const double delta = w.support_radius();
        const double logN = std::log(static_cast<double>(N));
        r.tail = std::pow(delta, 4) * std::pow(logN, 2 * p.degree() - 2) / static_cast<double>(N);
    }
    const double rhs = r.balanced_term + r.tail;
    r.ratio = rhs > 0 ? r.lhs / rhs : 0.0;
    return r;
}

LengthInertiaReport length_inertia_check(const ArithFnTable& f, long long N, long long h, long long H) {
    require_Nh(N, h);
    if (h > H) throw ParameterDomainError("length inertia needs h <= H");
    if (static_cast<Real>(H) * H * H > static_cast<Real>(N) * N)
        throw ParameterDomainError("length inertia needs H <= N^(2/3)");
    f.require(N - H, 2 * N + H, "length_inertia_check");
    const double sup = f.sup_norm(N - H, 2 * N + H);
    const double logN = std::log(static_cast<double>(N));
    const double c = f.log_poly ? f.log_poly->degree() : 0;
    const double logterm = std::pow(logN, 2 * c);  // c = 0 for the zero polynomial: H^3 stays
    const double Hd = static_cast<double>(H), hd = static_cast<double>(h), Nd = static_cast<double>(N);

    LengthInertiaReport r;
    r.original_lhs = selberg_integral(f, N, H).value;
    r.original_scaled = (Hd / hd) * (Hd / hd) * selberg_integral(f, N, h).value;
    const long long rest = H - h * (H / h);
    r.original_fraction = rest > 0 ? selberg_integral(f, N, rest).value : 0.0;  // J_f(N, 0) = 0
    r.original_tail = Hd * Hd * Hd * (sup * sup + logterm);
    r.original_ratio = r.original_lhs / (r.original_scaled + r.original_fraction + r.original_tail);

    r.modified_lhs = modified_selberg_integral(f, N, H, 1).value;
    r.modified_scaled = (Hd / hd) * (Hd / hd) * modified_selberg_integral(f, N, h, 1).value;
    r.modified_sup = (Nd * std::pow(hd, 4) / (Hd * Hd) + Hd * Hd * Hd) * sup * sup;
    r.modified_log = Hd * Hd * Hd * logterm;
    r.modified_ratio = r.modified_lhs / (r.modified_scaled + r.modified_sup + r.modified_log);
    return r;
}

ClComparison cl_comparison(const ArithFnTable& s, long long N, long long delta) {
    require_Nh(N, delta);
    if (!s.balanced()) throw PreconditionError("cl_comparison needs a balanced function");
    ClComparison r;
    r.cesaro = modified_selberg_integral(s, N, delta, 1).value;
    r.sharp = selberg_integral(s, N, delta).value;
    const double sup = s.sup_norm(N - delta, 2 * N + delta);
    r.sup_term = std::pow(static_cast<double>(delta), 3) * sup * sup;
    const double rhs = r.sharp + r.sup_term;
    r.constant = rhs > 0 ? r.cesaro / rhs : 0.0;
    return r;
}

double d3_lower_probe(const ArithFnTable& d3, long long N, long long h) {
    const double J = selberg_integral(d3, N, h).value;
    const double logN = std::log(static_cast<double>(N));
    return J / (static_cast<double>(N) * static_cast<double>(h) * std::pow(logN, 4));
}

}  // namespace gallagher
