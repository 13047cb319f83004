#include "gallagher/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "gallagher/csv.hpp"
#include "gallagher/errors.hpp"
#include "gallagher/kernels.hpp"
#include "gallagher/parallel.hpp"
#include "gallagher/transforms.hpp"

namespace gallagher {

namespace {

using Real = long double;
using CReal = std::complex<long double>;

constexpr double kPi = std::numbers::pi;

void require_T_above_one(double T) {
    if (!(T > 1) || !std::isfinite(T)) throw ParameterDomainError("T must exceed 1");
}

// atanh(r) - r for r in [0, 1), accurate near 0.
Real atanh_minus_id(Real r) {
    if (r < 0.1L) {
        const Real r2 = r * r;
        Real term = r * r2, sum = 0;
        for (int k = 3; k < 60; k += 2) {
            sum += term / k;
            term *= r2;
        }
        return sum;
    }
    return std::atanh(r) - r;
}

// Sorted, deduplicated copy restricted to [lo, hi] with the ends included.
std::vector<double> partition(std::vector<double> cuts, double lo, double hi) {
    cuts.push_back(lo);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<double> out;
    for (double c : cuts)
        if (c >= lo && c <= hi) out.push_back(c);
    return out;
}

struct InnerSum {
    CReal value = 0;  // sum_n C_{y/T}(n - y) a_n at y
    CReal slope = 0;  // d/dz of the same sum, z = 1/y (constant between kinks)
};

InnerSum inner_sum(const DirichletPoly& D, double T, double y) {
    // Active n satisfy |n - y| < y / T.
    const double reach = y / T;
    const long long first = std::max(D.n_min, static_cast<long long>(std::floor(y - reach)));
    const long long last = std::min(D.n_max(), static_cast<long long>(std::ceil(y + reach)));
    InnerSum out;
    for (long long n = first; n <= last; ++n) {
        const Real dist = std::abs(static_cast<Real>(n) - y);
        const Real c = 1 - T * dist / y;
        if (c <= 0) continue;
        const CReal a = D.a[static_cast<std::size_t>(n - D.n_min)];
        out.value += c * a;
        out.slope += (n < y ? 1 : -1) * static_cast<Real>(T) * n * a;
    }
    return out;
}

// integral over [y1, y2] of |g(y)|^2 dy / y when g is affine in z = 1/y.
Real exact_segment(const DirichletPoly& D, double T, double y1, double y2) {
    const Real z1 = 1.0L / y1, z2 = 1.0L / y2;
    const Real zm = (z1 + z2) / 2;
    const Real r = (z1 - z2) / (2 * zm);
    const auto g = inner_sum(D, T, static_cast<double>(1 / zm));
    const Real i0 = 2 * std::atanh(r);
    const Real i1 = -2 * zm * atanh_minus_id(r);
    const Real i2 = 2 * zm * zm * atanh_minus_id(r);
    const Real cross = (g.value * std::conj(g.slope)).real();
    return std::norm(g.value) * i0 + 2 * cross * i1 + std::norm(g.slope) * i2;
}

Real simpson_segment(const DirichletPoly& D, double T, double y1, double y2, int panels) {
    // Composite Simpson in s = log y, where dy / y = ds.
    const int n = std::max(2, panels + (panels % 2));
    const Real s1 = std::log(static_cast<Real>(y1)), s2 = std::log(static_cast<Real>(y2));
    const Real h = (s2 - s1) / n;
    Real acc = 0;
    for (int i = 0; i <= n; ++i) {
        const double y = i == 0 ? y1 : i == n ? y2 : static_cast<double>(std::exp(s1 + h * i));
        const Real v = std::norm(inner_sum(D, T, y).value);
        acc += v * (i == 0 || i == n ? 1 : (i % 2 ? 4 : 2));
    }
    return acc * h / 3;
}

}  // namespace

void DirichletPoly::validate() const {
    if (n_min < 1) throw ParameterDomainError("Dirichlet polynomial needs n_min >= 1");
    if (a.empty()) throw ParameterDomainError("Dirichlet polynomial needs at least one coefficient");
    for (const auto& c : a)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw ParameterDomainError("non-finite coefficient");
}

DirichletPoly random_dirichlet(long long n_min, long long n_max, std::uint64_t seed) {
    if (n_min < 1 || n_max < n_min) throw ParameterDomainError("random_dirichlet: need 1 <= n_min <= n_max");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    DirichletPoly D{n_min, {}};
    for (long long n = n_min; n <= n_max; ++n) D.a.push_back(std::polar(std::sqrt(unit(rng)), 2 * kPi * unit(rng)));
    return D;
}

DirichletPoly read_dirichlet_csv(const std::string& path) {
    std::map<long long, std::complex<double>> entries;
    for (const auto& cells : csv::read_rows(path)) {
        if (cells.size() < 2 || cells.size() > 3) throw ParameterDomainError("coefficient rows must be n,re[,im]");
        const long long n = csv::parse_int(cells[0], "n");
        if (n < 1) throw ParameterDomainError("coefficient index must be positive");
        const double im = cells.size() == 3 ? csv::parse_double(cells[2], "im") : 0.0;
        if (!entries.emplace(n, std::complex<double>(csv::parse_double(cells[1], "re"), im)).second)
            throw ParameterDomainError("duplicate coefficient index " + std::to_string(n));
    }
    if (entries.empty()) throw ParameterDomainError("coefficient file is empty");
    DirichletPoly D{entries.begin()->first, {}};
    D.a.assign(static_cast<std::size_t>(entries.rbegin()->first - D.n_min + 1), {});
    for (const auto& [n, c] : entries) D.a[static_cast<std::size_t>(n - D.n_min)] = c;
    D.validate();
    return D;
}

double d_norm_sq_2T(const DirichletPoly& D, double T) {
    D.validate();
    if (!(T > 0) || !std::isfinite(T)) throw ParameterDomainError("T must be a positive real");
    const std::size_t count = D.a.size();
    std::vector<double> rows(count);
    // Row i: diagonal plus twice the real part of the strict upper row, with
    // log(n/m) taken through log1p so close indices keep full precision.
    parallel_for(count, [&](std::size_t i) {
        const double n = static_cast<double>(D.n_min + static_cast<long long>(i));
        Real off = 0;
        for (std::size_t k = i + 1; k < count; ++k) {
            const double m = static_cast<double>(D.n_min + static_cast<long long>(k));
            const double u = std::log1p((m - n) / n);
            off += (D.a[i] * std::conj(D.a[k])).real() * (2 * T * sinc(T * u / kPi));
        }
        rows[i] = static_cast<double>(std::norm(D.a[i]) * 2 * T + 2 * off);
    });
    return std::max(0.0, kernels::ordered_sum(rows));
}

ExpSumSpec to_expsum(const DirichletPoly& D) {
    D.validate();
    ExpSumSpec spec;
    for (std::size_t i = 0; i < D.a.size(); ++i) {
        spec.nu.push_back(std::log(static_cast<double>(D.n_min + static_cast<long long>(i))) / (2 * kPi));
        spec.s.push_back(D.a[i]);
    }
    return spec;
}

Theorem1Terms theorem1_rhs(const DirichletPoly& D, double T, const Theorem1Options& options) {
    D.validate();
    require_T_above_one(T);
    const bool clip = options.y_hi > options.y_lo;
    const double q = std::expm1(1.0 / T);

    std::vector<long long> active;
    for (std::size_t i = 0; i < D.a.size(); ++i)
        if (D.a[i] != std::complex<double>{}) active.push_back(D.n_min + static_cast<long long>(i));

    Theorem1Terms out;
    const double lo_main = static_cast<double>(D.n_min) * T / (T + 1);
    const double hi_main = static_cast<double>(D.n_max()) * T / (T - 1);
    out.y_lo = std::min(lo_main, static_cast<double>(D.n_min) / (1 + q));
    out.y_hi = q < 1 ? std::max(hi_main, static_cast<double>(D.n_max()) / (1 - q))
                     : std::numeric_limits<double>::infinity();
    if (active.empty()) return out;

    // Main term: between kinks {n T/(T+1), n, n T/(T-1)} the inner sum is affine in 1/y.
    {
        std::vector<double> cuts;
        for (long long n : active) {
            const double x = static_cast<double>(n);
            cuts.insert(cuts.end(), {x * T / (T + 1), x, x * T / (T - 1)});
        }
        const double lo = clip ? std::max(options.y_lo, lo_main) : lo_main;
        const double hi = clip ? std::min(options.y_hi, hi_main) : hi_main;
        if (hi > lo) {
            const auto ys = partition(std::move(cuts), lo, hi);
            std::vector<double> parts(ys.size() - 1);
            parallel_for(parts.size(), [&](std::size_t i) {
                parts[i] = static_cast<double>(options.method == Theorem1Method::exact
                                                   ? exact_segment(D, T, ys[i], ys[i + 1])
                                                   : simpson_segment(D, T, ys[i], ys[i + 1], options.panels));
            });
            out.main = T * T * kernels::ordered_sum(parts);
        }
    }

    // Remainder: piecewise constant in y with jumps at n / (1 +- q).
    if (q >= 1) {
        out.remainder = std::numeric_limits<double>::infinity();
        return out;
    }
    std::vector<Real> prefix(D.a.size() + 1);
    for (std::size_t i = 0; i < D.a.size(); ++i) prefix[i + 1] = prefix[i] + std::abs(D.a[i]);
    std::vector<double> cuts;
    for (long long n : active) {
        cuts.push_back(static_cast<double>(n) / (1 + q));
        cuts.push_back(static_cast<double>(n) / (1 - q));
    }
    const double lo_rem = static_cast<double>(D.n_min) / (1 + q);
    const double hi_rem = static_cast<double>(D.n_max()) / (1 - q);
    const double lo = clip ? std::max(options.y_lo, lo_rem) : lo_rem;
    const double hi = clip ? std::min(options.y_hi, hi_rem) : hi_rem;
    if (hi > lo) {
        const auto ys = partition(std::move(cuts), lo, hi);
        Real total = 0;
        for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
            const double mid = 0.5 * (ys[i] + ys[i + 1]);
            const long long first = std::max(D.n_min, static_cast<long long>(std::ceil(mid * (1 - q))));
            const long long last = std::min(D.n_max(), static_cast<long long>(std::floor(mid * (1 + q))));
            if (last < first) continue;
            const Real c = prefix[static_cast<std::size_t>(last - D.n_min + 1)] -
                           prefix[static_cast<std::size_t>(first - D.n_min)];
            total += c * c * std::log(static_cast<Real>(ys[i + 1]) / ys[i]);
        }
        out.remainder = static_cast<double>(total);
    }
    return out;
}

Theorem1Row theorem1_row(const DirichletPoly& D, double T) {
    Theorem1Row row{T, d_norm_sq_2T(D, T), theorem1_rhs(D, T), 0};
    const double rhs = row.terms.main + row.terms.remainder;
    row.ratio = rhs > 0 ? row.lhs / rhs : 0.0;
    return row;
}

void CriticalLineSpec::validate() const {
    if (N1 < 1 || N2 < N1) throw ParameterDomainError("critical-line spec needs 1 <= N1 <= N2");
    const auto len = static_cast<std::size_t>(N2 - N1 + 1);
    if (w.size() != len || b.size() != len) throw ParameterDomainError("window and coefficient tables must cover [N1, N2]");
}

DirichletPoly CriticalLineSpec::coefficients() const {
    validate();
    DirichletPoly D{N1, {}};
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double n = static_cast<double>(N1 + static_cast<long long>(i));
        D.a.push_back(w[i] * b[i] / std::sqrt(n));
    }
    return D;
}

CorollaryReport corollary_check(const CriticalLineSpec& P, double T, double eps) {
    require_T_above_one(T);
    if (!(eps > 0)) throw ParameterDomainError("epsilon must be positive");
    const auto D = P.coefficients();
    CorollaryReport r;
    r.lhs = d_norm_sq_2T(D, T);
    Theorem1Options opts;
    opts.y_lo = static_cast<double>(P.N1) / 2;
    opts.y_hi = 1.5 * static_cast<double>(P.N2);
    r.main = theorem1_rhs(D, T, opts).main;
    r.bound = std::pow(static_cast<double>(P.N2), 1 + eps) / (T * T);
    r.ratio = r.lhs / (r.main + r.bound);
    return r;
}

}  // namespace gallagher
