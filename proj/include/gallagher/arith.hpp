#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gallagher {

inline constexpr double kEulerGamma = 0.57721566490153286061;
/// First Stieltjes constant.
inline constexpr double kStieltjes1 = -0.07281584548367672486;

/// p(u) = sum c_i u^i, evaluated at u = log x.
struct LogPolynomial {
    std::vector<double> coefficients;  // ascending; empty means the zero polynomial

    bool is_zero() const;
    /// Degree c; the zero polynomial has c = 0 by convention.
    int degree() const;
    double operator()(double u) const;
    double at_log(double x) const;
    LogPolynomial derivative() const;
};

/// Values of f on [lo, hi].
struct ArithFnTable {
    long long lo = 1;
    long long hi = 1;
    std::vector<double> values;
    std::string name;
    std::optional<LogPolynomial> log_poly;

    double operator()(long long n) const { return values[static_cast<std::size_t>(n - lo)]; }
    bool covers(long long a, long long b) const { return a >= lo && b <= hi; }
    /// Throws RangeError naming `what` unless [a, b] lies inside the table.
    void require(long long a, long long b, const char* what) const;
    /// True when the mean value is known to vanish (log_poly absent or zero).
    bool balanced() const { return !log_poly || log_poly->is_zero(); }
    /// max |f| over [a, b] intersected with the table.
    double sup_norm(long long a, long long b) const;
};

inline constexpr long long kMaxTableEnd = 100'000'000;

/// d_k on [lo, hi] by repeated Dirichlet convolution with 1. For k <= 3 the
/// residue polynomial is attached after it passes the fit gate.
ArithFnTable divisor_table(int k, long long lo, long long hi);

/// p_k(u) = Res_{s=1} zeta(s)^k x^{s-1}: the local density of d_k near x, so
/// that sum_{x < n <= x+h} d_k(n) ~ h p_k(log x).
///   k = 1: 1
///   k = 2: u + 2 gamma
///   k = 3: u^2/2 + 3 gamma u + 3 gamma^2 - 3 gamma_1
LogPolynomial log_polynomial_dk(int k);

/// Q with sum_{n <= x} d_k(n) ~ x Q(log x), i.e. Q + Q' = p, Q = p - p' + p'' - ...
LogPolynomial summatory_polynomial(const LogPolynomial& p);

/// Least-squares fit of x^{-1} sum_{n<=x} d_k(n) over x in [1e5, 1e6] against a
/// polynomial in log x of the same degree as Q_k. Coefficients are compared in
/// the basis centred at the middle of the log-range.
struct FitGate {
    int k = 0;
    std::vector<double> derived;  // Q_k, centred basis
    std::vector<double> fitted;   // centred basis
    double centre = 0;            // u0
    double worst_relative = 0;
    bool passed = false;
};
FitGate fit_gate(int k);
/// Cached result of fit_gate(k) (run once per process).
const FitGate& fit_gate_cached(int k);

/// f(n) - p_f(log n); the result carries the zero polynomial.
ArithFnTable balanced_part(const ArithFnTable& f);

/// The zero function on [lo, hi] (balanced).
ArithFnTable zero_table(long long lo, long long hi);

/// Custom table from CSV rows "n,f(n)" over a contiguous range. An optional
/// first row "logpoly,c0,c1,..." attaches a log polynomial.
ArithFnTable read_arith_csv(const std::string& path);

}  // namespace gallagher
