#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gallagher {

/// Compactly supported piecewise polynomial.
///
/// Piece i lives on [b_i, b_{i+1}) and stores ascending coefficients in the
/// local variable (x - b_i). Outside [b_0, b_last] the value is zero; the last
/// breakpoint belongs to the last piece so closed-support formulas such as
/// 1_delta(delta) = 1 are reproduced.
class PiecewisePolynomial {
public:
    static constexpr std::size_t kMaxDegree = 64;

    PiecewisePolynomial(std::vector<double> breakpoints, std::vector<std::vector<double>> pieces);

    /// Identically zero on [lo, hi].
    static PiecewisePolynomial zero(double lo, double hi);
    /// Constant `value` on [lo, hi].
    static PiecewisePolynomial constant(double lo, double hi, double value);

    double operator()(double x) const;

    double lower() const { return breakpoints_.front(); }
    double upper() const { return breakpoints_.back(); }
    std::size_t piece_count() const { return pieces_.size(); }
    std::span<const double> breakpoints() const { return breakpoints_; }
    const std::vector<double>& coefficients(std::size_t piece) const { return pieces_[piece]; }
    double piece_width(std::size_t piece) const { return breakpoints_[piece + 1] - breakpoints_[piece]; }

    /// Largest stored piece degree.
    std::size_t degree() const;
    bool is_zero() const;

    /// Exact integral over the support.
    double integral() const;

    PiecewisePolynomial scaled(double factor) const;
    /// x -> -x.
    PiecewisePolynomial reflected() const;
    /// Merge neighbouring pieces that carry the same polynomial.
    PiecewisePolynomial coalesced() const;

    /// CSV rows "b_i,b_{i+1},c_0,...,c_d", one per piece.
    std::string to_csv() const;

private:
    std::vector<double> breakpoints_;
    std::vector<std::vector<double>> pieces_;
};

/// Exact convolution (p * q)(x) = integral of p(t) q(x - t) dt.
///
/// Output breakpoints are all pairwise sums of input breakpoints; each output
/// piece is assembled symbolically from the contributing piece pairs.
PiecewisePolynomial convolve(const PiecewisePolynomial& p, const PiecewisePolynomial& q);

/// Coefficients of c(x + shift) given those of c(x), ascending order.
std::vector<double> taylor_shift(std::span<const double> coefficients, double shift);

/// Horner evaluation of ascending coefficients.
double horner(std::span<const double> coefficients, double x);

}  // namespace gallagher
