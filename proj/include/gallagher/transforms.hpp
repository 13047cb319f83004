#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gallagher/weights.hpp"

namespace gallagher {

/// Normalized sinc: sin(pi x) / (pi x), sinc(0) = 1.
double sinc(double x);

/// Closed-form transform of a built-in weight, w^(y) = integral of w(t) e(-t y) dt.
///
///   unit_interval   2 delta sinc(2 delta y)
///   unit_step       delta sinc(delta y) e(-delta y / 2)
///   cesaro(j)       (4 delta / 2^(2^j)) sinc^(2^j)(delta y / 2^(j-1))
///   lanczos         (2 delta - Delta) sinc(Delta y) sinc((2 delta - Delta) y)
///
/// Throws UnsupportedError for custom weights.
std::complex<double> closed_form(const Weight& w, double y);

/// Exact transform of an arbitrary compactly supported spline.
///
/// Each piece is cut into sub-pieces with |2 pi y h| <= 1 and integrated by the
/// power series of the exponential, which converges to machine precision in a
/// fixed number of terms and has no 1/y singularity at the origin.
std::complex<double> generic_transform(const PiecewisePolynomial& p, double y);

/// closed_form when available, generic_transform otherwise.
std::complex<double> transform(const Weight& w, double y);

/// min over |t| <= T of |w^(t)|^2 and where it is attained.
struct IntervalMin {
    double T = 0;
    double argmin = 0;
    double m = 0;
    bool analytic = false;  // endpoint shortcut taken
};

struct MinimizerOptions {
    int base_points = 4096;
    bool allow_analytic_shortcut = true;
};

IntervalMin min_sq_on_interval(const Weight& w, double T, const MinimizerOptions& options = {});

/// Frequencies at which |w^| is known to be decreasing on [0, y): the first
/// zero of the closed form, or 0 when no such bound is available.
double monotone_radius(const Weight& w);

struct FrequencyGrid {
    double lo = 0;
    double hi = 1;
    int n = 101;
    std::vector<double> points() const;
};

/// Parses "lo:hi:n".
FrequencyGrid parse_frequency_grid(const std::string& text);

/// CSV rows "y,abs,abs_sq" over the grid, with header.
std::string transform_csv(const Weight& w, const FrequencyGrid& grid);

}  // namespace gallagher
