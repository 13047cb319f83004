#pragma once

// Shared generators for the property tests. Each test seeds its own engine,
// so failures reproduce from the printed seed alone.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "gallagher/expsum.hpp"
#include "gallagher/piecewise.hpp"
#include "gallagher/weights.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int integer(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

/// One of the built-in families with random admissible parameters.
inline gallagher::WeightSpec weight_spec(Rng& rng, bool even_only = true) {
    gallagher::WeightSpec s;
    s.delta = uniform(rng, 0.2, 3.0);
    switch (integer(rng, 0, even_only ? 2 : 3)) {
        case 0: s.family = gallagher::WeightFamily::unit_interval; break;
        case 1:
            s.family = gallagher::WeightFamily::cesaro;
            s.j = integer(rng, 0, 4);
            break;
        case 2:
            s.family = gallagher::WeightFamily::lanczos;
            s.Delta = s.delta * uniform(rng, 0.05, 1.0);
            break;
        default: s.family = gallagher::WeightFamily::unit_step; break;
    }
    return s;
}

/// Random spline: 1..4 pieces of degree <= 3 on sorted breakpoints.
inline gallagher::PiecewisePolynomial spline(Rng& rng) {
    const int pieces = integer(rng, 1, 4);
    std::vector<double> b{uniform(rng, -2, 0)};
    for (int i = 0; i < pieces; ++i) b.push_back(b.back() + uniform(rng, 0.1, 1.0));
    std::vector<std::vector<double>> c(pieces);
    for (auto& p : c) {
        p.resize(static_cast<std::size_t>(integer(rng, 1, 4)));
        for (double& x : p) x = uniform(rng, -1, 1);
    }
    return {b, c};
}

inline gallagher::ExpSumSpec expsum(Rng& rng, std::size_t terms, double nu_max = 10) {
    return gallagher::random_expsum(terms, rng(), nu_max);
}

}  // namespace testgen
