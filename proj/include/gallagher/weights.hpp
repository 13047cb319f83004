#pragma once

#include <string>
#include <string_view>

#include "gallagher/piecewise.hpp"

namespace gallagher {

enum class WeightFamily { unit_interval, unit_step, cesaro, lanczos, custom };

/// Which closed-form Fourier transform applies, if any.
enum class TransformKind { unit_interval, unit_step, cesaro, lanczos, generic };

struct WeightSpec {
    WeightFamily family = WeightFamily::unit_interval;
    double delta = 1.0;
    double Delta = 0.0;  // lanczos ramp width
    int j = 0;           // cesaro order
};

/// A weight: family tag, parameters and its exact spline form.
///
/// Built-in weights are real, nonnegative and bounded by 1; all of them except
/// unit_step are even. unit_step is 1 on (0, delta], so eval(0) = 0 even though
/// the spline's left-closed convention would give 1 there.
class Weight {
public:
    Weight(WeightSpec spec, PiecewisePolynomial spline, TransformKind kind, std::string label);

    const WeightSpec& spec() const { return spec_; }
    WeightFamily family() const { return spec_.family; }
    const PiecewisePolynomial& spline() const { return spline_; }
    TransformKind transform_kind() const { return kind_; }
    const std::string& label() const { return label_; }

    double operator()(double x) const;

    /// max(|lower|, |upper|) of the support.
    double support_radius() const;
    bool is_even() const { return spec_.family != WeightFamily::unit_step && even_; }

private:
    WeightSpec spec_;
    PiecewisePolynomial spline_;
    TransformKind kind_;
    std::string label_;
    bool even_ = true;
};

/// Builds a built-in weight, validating its parameters.
Weight make_weight(const WeightSpec& spec);

/// Parses the mini-language "unit:delta=1", "step:delta=8",
/// "cesaro:j=2,delta=1.5", "lanczos:delta=2,Delta=0.5".
WeightSpec parse_weight_spec(std::string_view text);
std::string to_string(const WeightSpec& spec);

inline Weight make_weight(std::string_view text) { return make_weight(parse_weight_spec(text)); }

/// Wraps an arbitrary spline as a custom weight (generic transform only).
Weight make_custom_weight(PiecewisePolynomial spline, std::string label = "custom");

double eval(const Weight& w, double x);

/// (1 / (2 delta)) (w * w) where delta is the support radius of w.
Weight normalized_self_convolution(const Weight& w);

/// C^(0) = 1_delta, C^(j) = normalized self-convolution of C^(j-1) at radius delta/2.
Weight cesaro_family(int j, double delta);

/// Largest j accepted by cesaro_family (degree 2^j - 1 must stay within the spline bound).
inline constexpr int kMaxCesaroOrder = 6;

}  // namespace gallagher
