#pragma once

#include <string>
#include <vector>

#include "gallagher/arith.hpp"
#include "gallagher/correlation.hpp"
#include "gallagher/weights.hpp"

namespace gallagher {

// Throughout, x ~ N means the integers x in (N, 2N].

enum class SelbergKind { original, modified, jth, weighted, box };

struct SelbergResult {
    long long N = 0;
    long long h = 0;
    int j = -1;  // -1 when not applicable
    SelbergKind kind = SelbergKind::original;
    double value = 0;
};

std::string to_string(SelbergKind kind);

/// M_f(x, h) = h p_f(log x); zero for balanced tables.
double mean_value(const ArithFnTable& f, double x, double h);

/// J_f(N, h) = sum_{x~N} |sum_{x<n<=x+h} f(n) - M_f(x, h)|^2 by prefix sums.
SelbergResult selberg_integral(const ArithFnTable& f, long long N, long long h);

/// sum_{x~N} |sum_{|n-x|<=h} f(n) - (2h+1) p_f(log x)|^2, the symmetric-box
/// counterpart that C^(0)_h reproduces.
SelbergResult box_selberg_integral(const ArithFnTable& f, long long N, long long h);

/// j = 1: J~_f(N, h) with the Cesaro window and mean M_f(x, h), via double
/// prefix sums. j != 1: J^(j)_f(N, h) with C^(j)_h sampled on |n - x| <= h;
/// requires a balanced table.
SelbergResult modified_selberg_integral(const ArithFnTable& f, long long N, long long h, int j);

/// sum_{x~N} |sum_n w(n - x) f(n)|^2 with w sampled at integer offsets.
SelbergResult weighted_selberg_integral(const ArithFnTable& f, const Weight& w, long long N);

struct DftIdentityReport {
    double selberg = 0;       // J_{w,f}(N, H)
    double full = 0;          // sum over every x of |sum_{n~N} f(n) w(n - x)|^2
    double correlation = 0;   // sum_{n,m~N} f(n) f(m) C_w(n - m)
    double identity_error = 0;  // |full - correlation| / max(correlation, tiny)
    double boundary_error = 0;  // |selberg - correlation|
    double sup_f = 0;           // max |f| on [N - H, 2N + H]
    double normalized = 0;      // boundary_error / (H^3 sup_f^2)
};
DftIdentityReport dft_identity_check(const ArithFnTable& f, const Weight& w, long long N, long long H);

struct Proposition1Report {
    double lhs = 0;
    double balanced_term = 0;  // sum_{x~N} |sum_n w(n - x) f~(n)|^2
    double tail = 0;           // N^{-1} delta^4 (log N)^{2c-2}, dropped for p = 0
    double ratio = 0;          // lhs / (balanced_term + tail)
};
/// `w` is a bounded weight of support radius delta.
Proposition1Report proposition1_check(const ArithFnTable& f, const Weight& w, long long N);

struct LengthInertiaReport {
    // J_f(N, H) against (H/h)^2 J_f(N, h) + J_f(N, H - h[H/h]) + H^3 (||f||^2 + (log N)^{2c}).
    double original_lhs = 0;
    double original_scaled = 0;
    double original_fraction = 0;
    double original_tail = 0;
    double original_ratio = 0;
    // J~_f(N, H) against H^2 h^-2 J~_f(N, h) + (N h^4 H^-2 + H^3) ||f||^2 + H^3 (log N)^{2c}.
    double modified_lhs = 0;
    double modified_scaled = 0;
    double modified_sup = 0;
    double modified_log = 0;
    double modified_ratio = 0;
};
/// Requires 1 <= h <= H <= N^{2/3}.
LengthInertiaReport length_inertia_check(const ArithFnTable& f, long long N, long long h, long long H);

struct ClComparison {
    double cesaro = 0;  // sum_{x~N} |sum_n C_delta(n - x) s(n)|^2
    double sharp = 0;   // sum_{x~N} |sum_{x<n<=x+delta} s(n)|^2
    double sup_term = 0;  // delta^3 ||s||^2
    double constant = 0;  // cesaro / (sharp + sup_term)
};
/// Real balanced s, integer delta >= 1.
ClComparison cl_comparison(const ArithFnTable& s, long long N, long long delta);

/// J_3(N, h) / (N h log^4 N) with the residue mean of d_3.
double d3_lower_probe(const ArithFnTable& d3, long long N, long long h);

}  // namespace gallagher
