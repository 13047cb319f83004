#include "gallagher/kernels.hpp"

#include <algorithm>

#include "gallagher/errors.hpp"

namespace gallagher::kernels {

double ordered_sum(std::span<const double> partials) {
    long double acc = 0;
    for (double v : partials) acc += v;
    return static_cast<double>(acc);
}

namespace {

void check_window(std::span<const double> f, std::size_t start, std::span<const double> weights,
                  std::span<double> out) {
    if (out.empty()) return;
    if (weights.empty()) throw DegenerateInputError("window_sums: empty weight vector");
    if (start + out.size() + weights.size() - 1 > f.size()) throw RangeError("window_sums: data too short");
}

double window_at(std::span<const double> f, std::size_t base, std::span<const double> weights) {
    long double acc = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) acc += static_cast<long double>(weights[k]) * f[base + k];
    return static_cast<double>(acc);
}

double toeplitz_row(std::span<const double> f, std::span<const double> corr, std::size_t i) {
    const std::size_t max_lag = corr.size() / 2;
    const std::size_t lo = i >= max_lag ? i - max_lag : 0;
    const std::size_t hi = std::min(f.size() - 1, i + max_lag);
    long double acc = 0;
    for (std::size_t j = lo; j <= hi; ++j) acc += static_cast<long double>(corr[i - j + max_lag]) * f[j];
    return static_cast<double>(f[i] * acc);
}

}  // namespace

void window_sums_serial(std::span<const double> f, std::size_t start, std::span<const double> weights,
                        std::span<double> out) {
    check_window(f, start, weights, out);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = window_at(f, start + i, weights);
}

void window_sums(std::span<const double> f, std::size_t start, std::span<const double> weights,
                 std::span<double> out) {
    check_window(f, start, weights, out);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = window_at(f, start + i, weights); });
}

double sum_of_squares(std::span<const double> v) {
    long double acc = 0;
    for (double x : v) acc += static_cast<long double>(x) * x;
    return static_cast<double>(acc);
}

double toeplitz_form_serial(std::span<const double> f, std::span<const double> corr) {
    if (corr.size() % 2 == 0) throw DegenerateInputError("toeplitz_form: kernel length must be odd");
    std::vector<double> rows(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) rows[i] = toeplitz_row(f, corr, i);
    return ordered_sum(rows);
}

double toeplitz_form(std::span<const double> f, std::span<const double> corr) {
    if (corr.size() % 2 == 0) throw DegenerateInputError("toeplitz_form: kernel length must be odd");
    std::vector<double> rows(f.size());
    parallel_for(f.size(), [&](std::size_t i) { rows[i] = toeplitz_row(f, corr, i); });
    return ordered_sum(rows);
}

}  // namespace gallagher::kernels
