#pragma once

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP version; both reduce per-row partials in index order, so the two
// return bit-identical results for any thread count.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "gallagher/parallel.hpp"

namespace gallagher::kernels {

/// Ordered sum (the deterministic final reduction of every kernel).
double ordered_sum(std::span<const double> partials);

namespace detail {

template <class Kernel>
double hermitian_row(std::span<const double> nu, std::span<const std::complex<double>> s, std::size_t a,
                     const Kernel& kernel) {
    // Diagonal plus twice the real part of the strict upper row.
    double row = std::norm(s[a]) * kernel(0.0);
    double off = 0.0;
    for (std::size_t b = a + 1; b < nu.size(); ++b) off += (s[a] * std::conj(s[b])).real() * kernel(nu[a] - nu[b]);
    return row + 2.0 * off;
}

}  // namespace detail

/// sum_{a,b} s_a conj(s_b) K(nu_a - nu_b) for a real, even kernel K.
template <class Kernel>
double hermitian_form_serial(std::span<const double> nu, std::span<const std::complex<double>> s,
                             const Kernel& kernel) {
    std::vector<double> rows(nu.size());
    for (std::size_t a = 0; a < nu.size(); ++a) rows[a] = detail::hermitian_row(nu, s, a, kernel);
    return ordered_sum(rows);
}

template <class Kernel>
double hermitian_form(std::span<const double> nu, std::span<const std::complex<double>> s, const Kernel& kernel) {
    std::vector<double> rows(nu.size());
    parallel_for(nu.size(), [&](std::size_t a) { rows[a] = detail::hermitian_row(nu, s, a, kernel); });
    return ordered_sum(rows);
}

/// out[i] = sum_k weights[k] * f[start + i + k] for i in [0, out.size()).
/// `f` must hold start + out.size() + weights.size() - 1 entries.
void window_sums_serial(std::span<const double> f, std::size_t start, std::span<const double> weights,
                        std::span<double> out);
void window_sums(std::span<const double> f, std::size_t start, std::span<const double> weights,
                 std::span<double> out);

/// sum_i v[i]^2 in index order.
double sum_of_squares(std::span<const double> v);

/// sum_{i,j} f[i] f[j] corr[(i - j) + max_lag], the quadratic form of a real
/// symmetric banded Toeplitz kernel (corr has 2 * max_lag + 1 entries).
double toeplitz_form_serial(std::span<const double> f, std::span<const double> corr);
double toeplitz_form(std::span<const double> f, std::span<const double> corr);

}  // namespace gallagher::kernels
