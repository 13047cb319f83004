#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gallagher/weights.hpp"

namespace gallagher {

/// S(t) = sum_k s_k e(nu_k t) with strictly increasing real frequencies.
struct ExpSumSpec {
    std::vector<double> nu;
    std::vector<std::complex<double>> s;

    std::size_t size() const { return nu.size(); }
    /// Throws ParameterDomainError unless frequencies are finite, strictly
    /// increasing, non-empty and matched one-to-one with finite coefficients.
    void validate() const;
};

/// Seeded spec: nu uniform in [0, nu_max] (sorted, distinct), |s| <= 1.
ExpSumSpec random_expsum(std::size_t terms, std::uint64_t seed, double nu_max = 100.0);

/// Reads rows "nu,re,im" (header optional).
ExpSumSpec read_expsum_csv(const std::string& path);

/// Both sides of one inequality instance.
///
/// lhs <= rhs is the claim; rhs already includes the explicit constant, i.e.
/// rhs = constant * integral. holds <=> rhs - lhs >= -1e-9 max(1, rhs).
struct InequalityReport {
    double norm_sq = 0;   // ||S||^2 over (-T, T)
    double integral = 0;  // smoothed (or windowed) mean square
    double m = 0;         // interval minimum; 0 when the statement has no m
    double constant = 1;
    double lhs = 0;
    double rhs = 0;
    double slack = 0;
    bool holds = true;
    bool trivial = false;  // m vanished, so the bound carries no information
};

InequalityReport make_report(double norm_sq, double integral, double m, double constant, double lhs, double rhs);

/// ||S||^2_{L^2(-T, T)}, exactly, as sum s_a conj(s_b) sin(2 pi T u)/(pi u).
double norm_sq_2T(const ExpSumSpec& spec, double T);

/// integral over R of |sum s(nu) w(x - nu)|^2 dx for a real weight.
double smoothed_mean_square(const ExpSumSpec& spec, const Weight& w);

/// m ||S||^2 <= integral |sum s(nu) w(x - nu)|^2 dx with m = min_{|t|<=T} |w^(t)|^2.
InequalityReport verify_lemma(const ExpSumSpec& spec, const Weight& w, double T);

/// Same, with m and the self-correlation spline of w precomputed (for sweeps).
InequalityReport verify_lemma(const ExpSumSpec& spec, const PiecewisePolynomial& self_correlation, double m,
                              double w0_sq, double T);

/// Spline of x -> integral w(u) w(u + x) du (even, support doubled).
PiecewisePolynomial self_correlation(const Weight& w);

/// integral over R of |sum_{x < nu <= x + delta} s(nu)|^2 dx, exact.
double window_integral(const ExpSumSpec& spec, double delta);

/// ||S||^2_{2,T} <= pi^2 theta^2 / (delta^2 sin^2(pi theta)) * window_integral, T = theta/delta.
InequalityReport gallagher_original(const ExpSumSpec& spec, double delta, double theta);

/// Cesaro instance with delta = theta / T and constant pi^4 theta^2 T^2 / sin^4(pi theta).
struct CesaroInstance {
    InequalityReport report;
    double constant_times_m = 0;  // must equal 1
};
CesaroInstance cesaro_instance(const ExpSumSpec& spec, double T, double theta);

/// CSV "lhs,m,rhs,slack,holds,trivial" with header.
std::string report_csv(const InequalityReport& r);

}  // namespace gallagher
