#include "gallagher/weights.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "gallagher/csv.hpp"
#include "gallagher/errors.hpp"

namespace gallagher {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0) || !std::isfinite(v)) throw ParameterDomainError(std::string(name) + " must be a positive real");
}

bool spline_is_even(const PiecewisePolynomial& s) {
    const double r = std::max(std::abs(s.lower()), std::abs(s.upper()));
    if (std::abs(s.lower() + s.upper()) > 1e-12 * r) return false;
    for (int k = 1; k <= 16; ++k) {
        const double x = r * (k / 17.0) * 0.999;
        const double a = s(x), b = s(-x);
        if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) return false;
    }
    return true;
}

PiecewisePolynomial lanczos_spline(double delta, double Delta) {
    std::vector<double> bps{-delta};
    std::vector<std::vector<double>> pieces;
    pieces.push_back({0.0, 1.0 / Delta});
    if (Delta < delta) {
        bps.push_back(-delta + Delta);
        bps.push_back(delta - Delta);
        pieces.push_back({1.0});
    } else {
        bps.push_back(0.0);
    }
    pieces.push_back({1.0, -1.0 / Delta});
    bps.push_back(delta);
    return {std::move(bps), std::move(pieces)};
}

}  // namespace

Weight::Weight(WeightSpec spec, PiecewisePolynomial spline, TransformKind kind, std::string label)
    : spec_(spec), spline_(std::move(spline)), kind_(kind), label_(std::move(label)) {
    even_ = spec_.family != WeightFamily::unit_step && spline_is_even(spline_);
}

double Weight::operator()(double x) const {
    if (spec_.family == WeightFamily::unit_step && x <= 0) return 0.0;
    return spline_(x);
}

double Weight::support_radius() const {
    return std::max(std::abs(spline_.lower()), std::abs(spline_.upper()));
}

double eval(const Weight& w, double x) {
    return w(x);
}

Weight make_weight(const WeightSpec& spec) {
    const std::string label = to_string(spec);
    switch (spec.family) {
        case WeightFamily::unit_interval:
            require_positive(spec.delta, "delta");
            return {spec, PiecewisePolynomial::constant(-spec.delta, spec.delta, 1.0), TransformKind::unit_interval,
                    label};
        case WeightFamily::unit_step:
            require_positive(spec.delta, "delta");
            return {spec, PiecewisePolynomial::constant(0.0, spec.delta, 1.0), TransformKind::unit_step, label};
        case WeightFamily::cesaro:
            return cesaro_family(spec.j, spec.delta);
        case WeightFamily::lanczos:
            require_positive(spec.delta, "delta");
            require_positive(spec.Delta, "Delta");
            if (spec.Delta > spec.delta) throw ParameterDomainError("lanczos requires delta >= Delta");
            return {spec, lanczos_spline(spec.delta, spec.Delta), TransformKind::lanczos, label};
        case WeightFamily::custom:
            break;
    }
    throw UnsupportedError("make_weight: custom weights need a spline (use make_custom_weight)");
}

Weight make_custom_weight(PiecewisePolynomial spline, std::string label) {
    WeightSpec spec;
    spec.family = WeightFamily::custom;
    spec.delta = std::max(std::abs(spline.lower()), std::abs(spline.upper()));
    return {spec, std::move(spline), TransformKind::generic, std::move(label)};
}

Weight normalized_self_convolution(const Weight& w) {
    const double radius = w.support_radius();
    if (!(radius > 0) || w.spline().is_zero())
        throw DegenerateInputError("normalized self-convolution of a zero-support weight");
    auto spline = convolve(w.spline(), w.spline()).scaled(1.0 / (2.0 * radius));
    return make_custom_weight(std::move(spline), "selfconv(" + w.label() + ")");
}

Weight cesaro_family(int j, double delta) {
    require_positive(delta, "delta");
    if (j < 0) throw ParameterDomainError("cesaro order j must be a nonnegative integer");
    if (j > kMaxCesaroOrder)
        throw ResourceError("cesaro order j=" + std::to_string(j) + " exceeds the supported maximum " +
                            std::to_string(kMaxCesaroOrder));

    WeightSpec spec;
    spec.family = WeightFamily::cesaro;
    spec.j = j;
    spec.delta = delta;
    if (j == 0) return {spec, PiecewisePolynomial::constant(-delta, delta, 1.0), TransformKind::cesaro, to_string(spec)};

    // The recursion is deterministic in (j, delta); deep orders are costly to rebuild.
    static std::mutex cache_mutex;
    static std::map<std::pair<int, double>, PiecewisePolynomial> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find({j, delta}); it != cache.end())
            return {spec, it->second, TransformKind::cesaro, to_string(spec)};
    }
    auto inner = cesaro_family(j - 1, delta / 2);
    auto spline = normalized_self_convolution(inner).spline();
    {
        std::lock_guard lock(cache_mutex);
        cache.emplace(std::pair{j, delta}, spline);
    }
    return {spec, std::move(spline), TransformKind::cesaro, to_string(spec)};
}

WeightSpec parse_weight_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParameterDomainError("weight spec '" + std::string(text) + "' lacks ':'");
    const auto name = text.substr(0, colon);
    std::map<std::string, std::string, std::less<>> params;
    for (const auto& kv : csv::split(text.substr(colon + 1))) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParameterDomainError("weight parameter '" + kv + "' lacks '='");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    auto take = [&](const char* key) -> std::string {
        auto it = params.find(key);
        if (it == params.end()) throw ParameterDomainError("weight spec '" + std::string(text) + "' needs " + key);
        auto v = it->second;
        params.erase(it);
        return v;
    };

    WeightSpec spec;
    if (name == "unit") {
        spec.family = WeightFamily::unit_interval;
    } else if (name == "step") {
        spec.family = WeightFamily::unit_step;
    } else if (name == "cesaro") {
        spec.family = WeightFamily::cesaro;
        const auto j = csv::parse_int(take("j"), "j");
        if (j < 0 || j > kMaxCesaroOrder) throw ParameterDomainError("cesaro order out of range");
        spec.j = static_cast<int>(j);
    } else if (name == "lanczos") {
        spec.family = WeightFamily::lanczos;
        spec.Delta = csv::parse_double(take("Delta"), "Delta");
    } else {
        throw ParameterDomainError("unknown weight family '" + std::string(name) + "'");
    }
    spec.delta = csv::parse_double(take("delta"), "delta");
    if (!params.empty()) throw ParameterDomainError("unknown weight parameter '" + params.begin()->first + "'");
    return spec;
}

std::string to_string(const WeightSpec& spec) {
    switch (spec.family) {
        case WeightFamily::unit_interval: return "unit:delta=" + csv::format(spec.delta);
        case WeightFamily::unit_step: return "step:delta=" + csv::format(spec.delta);
        case WeightFamily::cesaro:
            return "cesaro:j=" + std::to_string(spec.j) + ",delta=" + csv::format(spec.delta);
        case WeightFamily::lanczos:
            return "lanczos:delta=" + csv::format(spec.delta) + ",Delta=" + csv::format(spec.Delta);
        case WeightFamily::custom: return "custom";
    }
    return "custom";
}

}  // namespace gallagher
