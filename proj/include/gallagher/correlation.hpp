#pragma once

#include <complex>
#include <vector>

#include "gallagher/weights.hpp"

namespace gallagher {

/// Integer samples w(k) for k in [offset, offset + values.size()).
struct SampledWeight {
    long long offset = 0;
    std::vector<double> values;
};

/// Samples a weight at the integers of its support. The unit step is taken
/// in its discrete form 1 on [1, floor(delta)].
SampledWeight sample_weight(const Weight& w);

/// Complex weight on the integer interval [a, a + values.size() - 1].
struct IntWeight {
    long long a = 0;
    std::vector<std::complex<double>> values;

    long long b() const { return a + static_cast<long long>(values.size()) - 1; }
    static IntWeight from_real(long long offset, const std::vector<double>& values);
    static IntWeight from_weight(const Weight& w);
    /// 1 on [1, H].
    static IntWeight unit_step(long long H);
};

/// C(h) = sum_{n - m = h} w(n) conj(w(m)) for |h| <= max_lag.
struct CorrelationTable {
    long long max_lag = 0;
    std::vector<std::complex<double>> values;  // values[h + max_lag]

    std::complex<double> at(long long lag) const;
};

enum class CorrelationMethod { automatic, direct, fast };

/// Direct summation up to 2^12 samples, zero-padded FFT beyond (or as forced).
CorrelationTable autocorrelation(const IntWeight& w, CorrelationMethod method = CorrelationMethod::automatic);

/// sum_n w(n) e(n alpha).
std::complex<double> dft(const IntWeight& w, double alpha);

/// sum_h C(h) e(h alpha), which equals |dft(w, alpha)|^2.
std::complex<double> correlation_dft(const CorrelationTable& table, double alpha);

/// |sum_{1<=n<=H} e(n alpha)|^2 = sin^2(pi H alpha) / sin^2(pi alpha), H^2 at integers.
double fejer(long long H, double alpha);

struct PositivityReport {
    bool ok = true;
    double min_real = 0;      // min over the grid of Re sum_h C(h) e(h alpha)
    double max_abs_imag = 0;  // max over the grid of |Im ...|
};
/// Re >= -1e-9 C(0) and |Im| <= 1e-9 C(0) on every grid point.
PositivityReport positivity_check(const IntWeight& w, const std::vector<double>& alphas);

/// Uniform alpha grid on [-1/2, 1/2) with n points.
std::vector<double> alpha_grid(int n);

/// integral over one period of |sum_k c_k e((offset + k) alpha)|^2, by the
/// mean over M equispaced nodes. M exceeds the frequency spread, so the
/// rule is exact for the trigonometric polynomial.
double circle_mean_square(const std::vector<std::complex<double>>& coefficients, long long offset, int nodes = 0);

struct ParsevalReport {
    double integral = 0;
    double energy = 0;  // C(0) = sum |w(n)|^2
    double relative_error = 0;
};
/// Trapezoid rule on max(2^14, 4 * width) nodes.
ParsevalReport parseval_check(const IntWeight& w);

/// max over a grid of |U_H(alpha)| / min(H, 1/|alpha|) on |alpha| <= 1/2.
double fejer_sum_bound_ratio(long long H, int grid_points);

}  // namespace gallagher
