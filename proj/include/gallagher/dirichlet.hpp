#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gallagher/expsum.hpp"

namespace gallagher {

/// D(t) = sum_{n_min <= n <= n_max} a_n n^{it}.
struct DirichletPoly {
    long long n_min = 1;
    std::vector<std::complex<double>> a;  // a[i] is the coefficient of n_min + i

    long long n_max() const { return n_min + static_cast<long long>(a.size()) - 1; }
    void validate() const;
};

/// Seeded polynomial with |a_n| <= 1 on [n_min, n_max].
DirichletPoly random_dirichlet(long long n_min, long long n_max, std::uint64_t seed);

/// Rows "n,re[,im]"; missing n inside the range get coefficient 0.
DirichletPoly read_dirichlet_csv(const std::string& path);

/// ||D||^2 over (-T, T): sum a_n conj(a_m) 2 sin(T log(n/m)) / log(n/m).
double d_norm_sq_2T(const DirichletPoly& D, double T);

/// The same polynomial as an exponential sum with nu = log(n) / (2 pi).
/// Zero coefficients are kept so the frequency set matches the index range.
ExpSumSpec to_expsum(const DirichletPoly& D);

enum class Theorem1Method {
    exact,    // closed-form integration on each smooth segment
    simpson,  // composite Simpson in log y, `panels` per segment
};

struct Theorem1Options {
    Theorem1Method method = Theorem1Method::exact;
    int panels = 64;
    /// Optional clip of the y-range (the critical-line check uses [N1/2, 3 N2/2]).
    double y_lo = 0;
    double y_hi = 0;  // <= y_lo means no clip
};

struct Theorem1Terms {
    double main = 0;       // T^2 integral |sum_n C_{y/T}(n - y) a_n|^2 dy/y
    double remainder = 0;  // integral (sum_{|n-y| <= Delta} |a_n|)^2 dy/y, Delta = y (e^{1/T} - 1)
    double y_lo = 0;       // support of both integrands
    double y_hi = 0;
};

/// Requires T > 1. For T <= 1/log 2 the remainder window never closes and
/// the remainder is +infinity.
Theorem1Terms theorem1_rhs(const DirichletPoly& D, double T, const Theorem1Options& options = {});

struct Theorem1Row {
    double T = 0;
    double lhs = 0;
    Theorem1Terms terms;
    double ratio = 0;  // lhs / (main + remainder)
};
Theorem1Row theorem1_row(const DirichletPoly& D, double T);

/// P(t) = sum_{N1 <= n <= N2} w(n) b(n) n^{-1/2 - it}.
struct CriticalLineSpec {
    long long N1 = 1;
    long long N2 = 1;
    std::vector<double> w;                // w[i] at n = N1 + i
    std::vector<std::complex<double>> b;  // b[i] at n = N1 + i
    void validate() const;
    /// a_n = w(n) b(n) n^{-1/2}. The sign of t in n^{-it} only conjugates
    /// the transform and leaves every mean square unchanged.
    DirichletPoly coefficients() const;
};

struct CorollaryReport {
    double lhs = 0;    // ||P||^2_{2,T}
    double main = 0;   // T^2 integral over [N1/2, 3 N2/2]
    double bound = 0;  // N2^{1+eps} / T^2
    double ratio = 0;  // lhs / (main + bound)
};
CorollaryReport corollary_check(const CriticalLineSpec& P, double T, double eps);

}  // namespace gallagher
