#include "gallagher/correlation.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include "gallagher/errors.hpp"
#include "gallagher/parallel.hpp"

namespace gallagher {

namespace {

using Real = long double;
using CReal = std::complex<long double>;
constexpr Real kPi = std::numbers::pi_v<long double>;
constexpr std::size_t kDirectLimit = 4096;

// e(a) = exp(2 pi i a) with the argument reduced mod 1.
CReal phase(Real a) {
    const Real frac = a - std::nearbyint(a);
    return {std::cos(2 * kPi * frac), std::sin(2 * kPi * frac)};
}

CorrelationTable direct(const IntWeight& w) {
    const auto n = static_cast<long long>(w.values.size());
    CorrelationTable t{n - 1, std::vector<std::complex<double>>(static_cast<std::size_t>(2 * n - 1))};
    for (long long lag = 0; lag < n; ++lag) {
        CReal acc = 0;
        for (long long m = 0; m + lag < n; ++m)
            acc += CReal(w.values[static_cast<std::size_t>(m + lag)]) * std::conj(CReal(w.values[static_cast<std::size_t>(m)]));
        const std::complex<double> v(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
        t.values[static_cast<std::size_t>(lag + n - 1)] = v;
        t.values[static_cast<std::size_t>(n - 1 - lag)] = std::conj(v);
    }
    return t;
}

// FFTW planning is not thread-safe.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};

CorrelationTable fast(const IntWeight& w) {
    const std::size_t n = w.values.size();
    std::size_t size = 1;
    while (size < 2 * n) size <<= 1;
    std::unique_ptr<fftw_complex[], FftwFree> buf(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * size)));
    if (!buf) throw ResourceError("autocorrelation: FFT buffer allocation failed");
    fftw_plan forward, backward;
    {
        std::lock_guard lock(planner_mutex());
        forward = fftw_plan_dft_1d(static_cast<int>(size), buf.get(), buf.get(), FFTW_FORWARD, FFTW_ESTIMATE);
        backward = fftw_plan_dft_1d(static_cast<int>(size), buf.get(), buf.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    for (std::size_t i = 0; i < size; ++i) {
        buf[i][0] = i < n ? w.values[i].real() : 0.0;
        buf[i][1] = i < n ? w.values[i].imag() : 0.0;
    }
    fftw_execute(forward);
    for (std::size_t i = 0; i < size; ++i) {
        buf[i][0] = buf[i][0] * buf[i][0] + buf[i][1] * buf[i][1];
        buf[i][1] = 0.0;
    }
    fftw_execute(backward);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
    }
    // Cyclic index h (mod size) holds sum_{n-m=h} w(n) conj(w(m)).
    const auto lags = static_cast<long long>(n) - 1;
    CorrelationTable t{lags, std::vector<std::complex<double>>(static_cast<std::size_t>(2 * lags + 1))};
    const double scale = 1.0 / static_cast<double>(size);
    for (long long h = -lags; h <= lags; ++h) {
        const std::size_t idx = static_cast<std::size_t>((h + static_cast<long long>(size)) % static_cast<long long>(size));
        t.values[static_cast<std::size_t>(h + lags)] = {buf[idx][0] * scale, buf[idx][1] * scale};
    }
    return t;
}

}  // namespace

SampledWeight sample_weight(const Weight& w) {
    SampledWeight out;
    if (w.family() == WeightFamily::unit_step) {
        // Discrete unit step: 1 on [1, delta].
        const auto top = static_cast<long long>(std::floor(w.spec().delta));
        if (top < 1) throw DegenerateInputError("unit step of length < 1 has no integer samples");
        out.offset = 1;
        out.values.assign(static_cast<std::size_t>(top), 1.0);
        return out;
    }
    const auto a = static_cast<long long>(std::ceil(w.spline().lower()));
    const auto b = static_cast<long long>(std::floor(w.spline().upper()));
    if (b < a) throw DegenerateInputError("weight '" + w.label() + "' has no integer samples");
    out.offset = a;
    for (long long k = a; k <= b; ++k) out.values.push_back(w(static_cast<double>(k)));
    return out;
}

IntWeight IntWeight::from_real(long long offset, const std::vector<double>& values) {
    IntWeight w{offset, {}};
    w.values.assign(values.begin(), values.end());
    return w;
}

IntWeight IntWeight::from_weight(const Weight& w) {
    const auto s = sample_weight(w);
    return from_real(s.offset, s.values);
}

IntWeight IntWeight::unit_step(long long H) {
    if (H < 1) throw ParameterDomainError("unit step needs H >= 1");
    return {1, std::vector<std::complex<double>>(static_cast<std::size_t>(H), 1.0)};
}

std::complex<double> CorrelationTable::at(long long lag) const {
    if (lag < -max_lag || lag > max_lag) return {};
    return values[static_cast<std::size_t>(lag + max_lag)];
}

CorrelationTable autocorrelation(const IntWeight& w, CorrelationMethod method) {
    if (w.values.empty()) throw DegenerateInputError("autocorrelation of an empty weight");
    for (const auto& v : w.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ParameterDomainError("non-finite weight value");
    if (method == CorrelationMethod::automatic)
        method = w.values.size() <= kDirectLimit ? CorrelationMethod::direct : CorrelationMethod::fast;
    return method == CorrelationMethod::direct ? direct(w) : fast(w);
}

std::complex<double> dft(const IntWeight& w, double alpha) {
    CReal acc = 0;
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        const Real n = static_cast<Real>(w.a + static_cast<long long>(i));
        acc += CReal(w.values[i]) * phase(n * alpha);
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::complex<double> correlation_dft(const CorrelationTable& table, double alpha) {
    CReal acc = 0;
    for (long long h = -table.max_lag; h <= table.max_lag; ++h)
        acc += CReal(table.at(h)) * phase(static_cast<Real>(h) * alpha);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double fejer(long long H, double alpha) {
    if (H < 1) throw ParameterDomainError("Fejer kernel needs H >= 1");
    const Real frac = alpha - std::nearbyint(static_cast<Real>(alpha));
    if (frac == 0) return static_cast<double>(H) * static_cast<double>(H);
    const Real num = std::sin(kPi * std::fmod(static_cast<Real>(H) * frac, 2.0L));
    const Real den = std::sin(kPi * frac);
    return static_cast<double>(num * num / (den * den));
}

PositivityReport positivity_check(const IntWeight& w, const std::vector<double>& alphas) {
    const auto table = autocorrelation(w);
    const double c0 = table.at(0).real();
    std::vector<std::complex<double>> values(alphas.size());
    parallel_for(alphas.size(), [&](std::size_t i) { values[i] = correlation_dft(table, alphas[i]); });
    PositivityReport r;
    r.min_real = values.empty() ? 0.0 : values.front().real();
    for (const auto& v : values) {
        r.min_real = std::min(r.min_real, v.real());
        r.max_abs_imag = std::max(r.max_abs_imag, std::abs(v.imag()));
    }
    r.ok = r.min_real >= -1e-9 * c0 && r.max_abs_imag <= 1e-9 * c0;
    return r;
}

std::vector<double> alpha_grid(int n) {
    if (n < 1) throw ParameterDomainError("alpha grid needs at least one point");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = -0.5 + static_cast<double>(i) / n;
    return out;
}

double circle_mean_square(const std::vector<std::complex<double>>& coefficients, long long offset, int nodes) {
    const auto spread = static_cast<long long>(coefficients.size());
    if (nodes <= 0) {
        nodes = 1;
        while (nodes <= 2 * spread) nodes <<= 1;
    }
    if (nodes <= 2 * (spread - 1)) throw ParameterDomainError("circle_mean_square: too few nodes to resolve |.|^2");
    const IntWeight w{offset, coefficients};
    std::vector<double> sq(static_cast<std::size_t>(nodes));
    parallel_for(sq.size(), [&](std::size_t i) {
        sq[i] = std::norm(dft(w, -0.5 + static_cast<double>(i) / nodes));
    });
    Real acc = 0;
    for (double v : sq) acc += v;
    return static_cast<double>(acc / nodes);
}

ParsevalReport parseval_check(const IntWeight& w) {
    int nodes = 1 << 14;
    while (nodes <= 4 * static_cast<long long>(w.values.size())) nodes <<= 1;
    ParsevalReport r;
    r.integral = circle_mean_square(w.values, w.a, nodes);
    r.energy = autocorrelation(w).at(0).real();
    r.relative_error = std::abs(r.integral - r.energy) / std::max(r.energy, 1e-300);
    return r;
}

double fejer_sum_bound_ratio(long long H, int grid_points) {
    if (grid_points < 2) throw ParameterDomainError("grid needs at least two points");
    double worst = 0;
    for (int i = 1; i <= grid_points; ++i) {
        const double alpha = 0.5 * i / grid_points;  // |U_H| is even in alpha
        const double u = std::sqrt(fejer(H, alpha));
        worst = std::max(worst, u / std::min(static_cast<double>(H), 1.0 / alpha));
    }
    return worst;
}

}  // namespace gallagher
