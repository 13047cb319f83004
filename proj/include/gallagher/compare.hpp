#pragma once

#include <string>
#include <vector>

#include "gallagher/weights.hpp"

namespace gallagher {

enum class Verdict { T_better, almost_T_better, not_T_better };
std::string to_string(Verdict v);

struct ScanOptions {
    double y_max = 0;      // <= 0: 8 max(T, first zero of either transform)
    int points = 1 << 14;  // uniform cells on [0, y_max]
    bool refine = true;    // probe around every zero of w^ found on the grid
};

/// Parses "ymax=..,n=.." (either key optional).
ScanOptions parse_scan_options(const std::string& text);

struct ScanRow {
    double y = 0;
    double ratio = 0;  // |v^(y)|^2 / |w^(y)|^2 (inf when only w^ vanishes)
    bool violation = false;
};

/// v is T-better than w when r/m >= |v^(y)|^2 / |w^(y)|^2 for every y, with
/// r = min_{|t|<=T} |v^|^2 and m = min_{|t|<=T} |w^|^2.
///
/// Both weights must be even (the scan covers y >= 0). A violation inside
/// [0, T] gives not_T_better; violations only beyond T give almost_T_better
/// with `violation_measure` the fraction of violating cells in (T, y_max].
struct ComparisonReport {
    std::string v_label;
    std::string w_label;
    double T = 0;
    double r = 0;
    double m = 0;
    double ratio_threshold = 0;  // r / m
    double y_max = 0;
    std::vector<double> violation_set;  // violating y (grid and refinement)
    double violation_measure = 0;
    bool violation_within_T = false;
    Verdict verdict = Verdict::T_better;
    double gain_bound = 0;
    std::vector<ScanRow> rows;  // the uniform grid
};

ComparisonReport is_T_better(const Weight& v, const Weight& w, double T, const ScanOptions& scan = {});

/// (|w^(0)|^2 / m - 1) |v^(0)|^2 / r.
double gain_bound(const Weight& w, const Weight& v, double T);

/// max over a grid on [0, T] of |w^(y)|^2 / m - |v^(y)|^2 / r.
double pointwise_gain_max(const Weight& w, const Weight& v, double T, int points = 4096);

/// G_theta(x) = tan^2(pi theta x) / (2 pi theta x)^2, 1/4 at theta x = 0,
/// +infinity exactly at the poles theta x in 1/2 + Z.
double g_theta(double theta, double x);

struct GThetaReport {
    bool even = false;                 // in x and in theta
    bool increasing = false;           // strictly, on (0, 1]
    bool limit_zero = false;           // 1/4 as x -> 0
    bool increasing_in_theta = false;  // G_theta(1)
    bool theta_limits = false;         // theta -> 0 and theta -> 1/2
    bool zeros = false;                // exactly at x = k / theta
    bool poles = false;                // divergence at (2k + 1) / (2 theta)
    bool all() const { return even && increasing && limit_zero && increasing_in_theta && theta_limits && zeros && poles; }
};
GThetaReport g_theta_properties(const std::vector<double>& thetas, double x_lo, double x_hi, int x_points);

/// G_theta(x)^(2^j), the ratio |C^(j+1)^(y)|^2 / |C^(j)^(y)|^2 at theta = delta T / 2^j, x = y / T.
double cesaro_ratio(int j, double theta, double x);

struct LanczosComparison {
    ComparisonReport lanczos_vs_unit;    // L_{delta,Delta} against 1_delta
    ComparisonReport cesaro_vs_lanczos;  // C_delta against L_{delta,Delta}
    double tangent_form_max_rel = 0;     // tangent form vs transform quotient
};
/// Requires 0 < Delta T < delta T < 1/2.
LanczosComparison lanczos_comparison(double delta, double Delta, double T, const ScanOptions& scan = {});

/// (Delta pi y / tan((2 delta - Delta) pi y) + Delta pi y / tan(Delta pi y))^2.
double lanczos_tangent_form(double delta, double Delta, double y);

/// CSV "y,ratio,threshold,violation" with header.
std::string comparison_csv(const ComparisonReport& report);

}  // namespace gallagher
