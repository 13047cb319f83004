#pragma once

// Independent reference computations: quadrature and brute force, sharing no
// code path with the exact algorithms they check.

#include <functional>

#include "gallagher/arith.hpp"
#include "gallagher/dirichlet.hpp"
#include "gallagher/expsum.hpp"
#include "gallagher/weights.hpp"

namespace gallagher::oracle {

/// integral_{-T}^{T} |S(t)|^2 dt by adaptive Gauss-Kronrod over short panels.
double norm_sq_quadrature(const ExpSumSpec& spec, double T);

/// integral |sum s(nu) w(x - nu)|^2 dx by Gauss-Legendre on every interval
/// between shifted breakpoints (exact for the piecewise-polynomial integrand).
double smoothed_quadrature(const ExpSumSpec& spec, const Weight& w);

/// sum_{a,b} s_a conj(s_b) max(0, delta - |nu_a - nu_b|): the overlap length
/// of the two windows {x : x < nu <= x + delta}.
double window_integral_pairs(const ExpSumSpec& spec, double delta);

/// integral_{-T}^{T} |D(t)|^2 dt by adaptive Gauss-Kronrod.
double dirichlet_norm_quadrature(const DirichletPoly& D, double T);

/// T^2 integral |sum_n C_{y/T}(n - y) a_n|^2 dy / y by adaptive Gauss-Kronrod
/// between the kinks of a single-term polynomial a_n = 1.
double theorem1_single_term(long long n, double T);

/// Ordered k-tuples with product n, counted by nested divisor loops.
long long divisor_count(int k, long long n);

/// sum_{x~N} |sum_{x<n<=x+h} f(n) - mean(x)|^2 by a double loop.
double selberg_brute(const std::function<double(long long)>& f, const std::function<double(long long)>& mean,
                     long long N, long long h);

/// sum_{x~N} |sum_{k=lo}^{hi} w(k) f(x + k) - mean(x)|^2 by a double loop.
double weighted_brute(const std::function<double(long long)>& f, const std::function<double(long long)>& w,
                      long long lo, long long hi, const std::function<double(long long)>& mean, long long N);

/// The Jackson-de La Vallee Poussin cubic on [-delta, delta], typed in from
/// its piecewise formula.
PiecewisePolynomial remark_cubic(double delta);

}  // namespace gallagher::oracle
