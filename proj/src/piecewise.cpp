#include "gallagher/piecewise.hpp"

#include <algorithm>
#include <cmath>

#include "gallagher/csv.hpp"
#include "gallagher/errors.hpp"

namespace gallagher {

namespace {

// Convolution runs in extended precision: the binomial re-expansions it needs
// lose a few digits that double cannot spare at degree ~30.
using Real = long double;
using Poly = std::vector<Real>;

void shift_in_place(Poly& c, Real h) {
    const std::size_t n = c.size();
    if (n < 2 || h == 0) return;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) c[j] += h * c[j + 1];
}

Real horner_ld(const Poly& c, Real x) {
    Real acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

void trim_trailing_zeros(std::vector<double>& c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
}

}  // namespace

std::vector<double> taylor_shift(std::span<const double> coefficients, double shift) {
    Poly c(coefficients.begin(), coefficients.end());
    shift_in_place(c, shift);
    return {c.begin(), c.end()};
}

double horner(std::span<const double> coefficients, double x) {
    double acc = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * x + coefficients[i];
    return acc;
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<double> breakpoints, std::vector<std::vector<double>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2) throw DegenerateInputError("piecewise polynomial needs at least 2 breakpoints");
    if (pieces_.size() + 1 != breakpoints_.size())
        throw DegenerateInputError("piecewise polynomial: piece count must equal breakpoint count - 1");
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!std::isfinite(breakpoints_[i])) throw DegenerateInputError("non-finite breakpoint");
        if (i && !(breakpoints_[i] > breakpoints_[i - 1]))
            throw DegenerateInputError("breakpoints must be strictly increasing");
    }
    for (auto& piece : pieces_) {
        if (piece.empty()) piece.push_back(0.0);
        trim_trailing_zeros(piece);
        if (piece.size() > kMaxDegree + 1)
            throw ResourceError("piece degree exceeds the bound of " + std::to_string(kMaxDegree));
        for (double v : piece)
            if (!std::isfinite(v)) throw DegenerateInputError("non-finite coefficient");
    }
}

PiecewisePolynomial PiecewisePolynomial::zero(double lo, double hi) {
    return PiecewisePolynomial({lo, hi}, {{0.0}});
}

PiecewisePolynomial PiecewisePolynomial::constant(double lo, double hi, double value) {
    return PiecewisePolynomial({lo, hi}, {{value}});
}

double PiecewisePolynomial::operator()(double x) const {
    if (!(x >= breakpoints_.front()) || x > breakpoints_.back()) return 0.0;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
    i = std::min(i, pieces_.size()) - 1;
    return horner(pieces_[i], x - breakpoints_[i]);
}

std::size_t PiecewisePolynomial::degree() const {
    std::size_t d = 0;
    for (const auto& p : pieces_) d = std::max(d, p.size() - 1);
    return d;
}

bool PiecewisePolynomial::is_zero() const {
    return std::all_of(pieces_.begin(), pieces_.end(),
                       [](const auto& p) { return std::all_of(p.begin(), p.end(), [](double v) { return v == 0.0; }); });
}

double PiecewisePolynomial::integral() const {
    Real total = 0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const Real w = piece_width(i);
        Real p = w;
        for (std::size_t m = 0; m < pieces_[i].size(); ++m) {
            total += pieces_[i][m] * p / static_cast<Real>(m + 1);
            p *= w;
        }
    }
    return static_cast<double>(total);
}

PiecewisePolynomial PiecewisePolynomial::scaled(double factor) const {
    auto pieces = pieces_;
    for (auto& p : pieces)
        for (double& v : p) v *= factor;
    return {breakpoints_, std::move(pieces)};
}

PiecewisePolynomial PiecewisePolynomial::reflected() const {
    const std::size_t n = pieces_.size();
    std::vector<double> bps(breakpoints_.rbegin(), breakpoints_.rend());
    for (double& b : bps) b = -b;
    std::vector<std::vector<double>> pieces(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t i = n - 1 - j;
        auto c = taylor_shift(pieces_[i], piece_width(i));
        for (std::size_t m = 1; m < c.size(); m += 2) c[m] = -c[m];
        pieces[j] = std::move(c);
    }
    return {std::move(bps), std::move(pieces)};
}

PiecewisePolynomial PiecewisePolynomial::coalesced() const {
    std::vector<double> bps{breakpoints_.front()};
    std::vector<std::vector<double>> pieces{pieces_.front()};
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        const double width = bps.size() >= 1 ? breakpoints_[i] - bps.back() : 0.0;
        auto continued = taylor_shift(pieces.back(), width);
        const auto& next = pieces_[i];
        const std::size_t len = std::max(continued.size(), next.size());
        continued.resize(len, 0.0);
        // Coefficient-wise match within the rounding of the shift itself, so
        // spline pieces that differ only in a high-order jump are never merged.
        std::vector<double> magnitude(pieces.back().size());
        std::transform(pieces.back().begin(), pieces.back().end(), magnitude.begin(),
                       [](double v) { return std::abs(v); });
        auto bound = taylor_shift(magnitude, width);
        bound.resize(len, 0.0);
        bool same = true;
        for (std::size_t m = 0; m < len && same; ++m) {
            const double nm = m < next.size() ? next[m] : 0.0;
            same = std::abs(continued[m] - nm) <= 1e-13 * std::max(bound[m], std::abs(nm));
        }
        if (same) continue;
        bps.push_back(breakpoints_[i]);
        pieces.push_back(next);
    }
    bps.push_back(breakpoints_.back());
    return {std::move(bps), std::move(pieces)};
}

std::string PiecewisePolynomial::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        std::vector<std::string> cells{csv::format(breakpoints_[i]), csv::format(breakpoints_[i + 1])};
        for (double c : pieces_[i]) cells.push_back(csv::format(c));
        out += csv::row(cells);
        out += '\n';
    }
    return out;
}

PiecewisePolynomial convolve(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
    const std::size_t out_degree = p.degree() + q.degree() + 1;
    if (out_degree > PiecewisePolynomial::kMaxDegree)
        throw ResourceError("convolution degree " + std::to_string(out_degree) + " exceeds the bound of " +
                            std::to_string(PiecewisePolynomial::kMaxDegree));

    const auto pb = p.breakpoints();
    const auto qb = q.breakpoints();
    std::vector<double> sums;
    sums.reserve(pb.size() * qb.size());
    for (double a : pb)
        for (double c : qb) sums.push_back(a + c);
    std::sort(sums.begin(), sums.end());
    const double extent = (p.upper() - p.lower()) + (q.upper() - q.lower());
    const double merge_tol = 1e-12 * extent;
    std::vector<double> xs;
    for (double s : sums)
        if (xs.empty() || s - xs.back() > merge_tol) xs.push_back(s);
    // Exact Minkowski-sum endpoints.
    xs.front() = p.lower() + q.lower();
    xs.back() = p.upper() + q.upper();

    auto nearest = [&](double x) {
        auto it = std::lower_bound(xs.begin(), xs.end(), x - merge_tol);
        return static_cast<std::size_t>(it - xs.begin());
    };

    const std::size_t n_out = xs.size() - 1;
    std::vector<Poly> acc(n_out, Poly(out_degree + 1, 0.0L));

    // binom[m][a]
    std::vector<Poly> binom(q.degree() + 1);
    for (std::size_t m = 0; m <= q.degree(); ++m) {
        binom[m].assign(m + 1, 1.0L);
        for (std::size_t a = 1; a < m; ++a) binom[m][a] = binom[m - 1][a - 1] + binom[m - 1][a];
    }

    for (std::size_t i = 0; i < p.piece_count(); ++i) {
        const Real a_i = pb[i];
        const Real len_p = p.piece_width(i);
        const Poly pc(p.coefficients(i).begin(), p.coefficients(i).end());
        for (std::size_t k = 0; k < q.piece_count(); ++k) {
            const Real c_k = qb[k];
            const Real len_q = q.piece_width(k);
            const auto& qc_raw = q.coefficients(k);
            const std::size_t first = nearest(pb[i] + qb[k]);
            const std::size_t last = nearest(pb[i + 1] + qb[k + 1]);
            for (std::size_t o = first; o < last && o < n_out; ++o) {
                const Real x0 = xs[o];
                const Real width = static_cast<Real>(xs[o + 1]) - x0;
                const Real z0 = x0 - a_i - c_k;
                const Real zmid = z0 + width / 2;
                // s-limits of the overlap of [0, len_p) with z - [0, len_q).
                const bool lower_moves = zmid - len_q > 0;
                const bool upper_moves = zmid < len_p;
                const Real lo_mid = lower_moves ? zmid - len_q : 0;
                const Real hi_mid = upper_moves ? zmid : len_p;
                if (!(hi_mid > lo_mid)) continue;

                Poly qt(qc_raw.begin(), qc_raw.end());
                shift_in_place(qt, z0);  // qt(v) = Q(z0 + v), v = u - s
                const std::size_t dq = qt.size() - 1;
                for (std::size_t alpha = 0; alpha <= dq; ++alpha) {
                    // Coefficient of u^alpha: P(s) * sum_m qt_m binom(m, alpha) (-s)^(m - alpha).
                    Poly g(dq - alpha + 1);
                    for (std::size_t beta = 0; beta + alpha <= dq; ++beta) {
                        const Real sign = (beta % 2) ? -1.0L : 1.0L;
                        g[beta] = sign * qt[alpha + beta] * binom[alpha + beta][alpha];
                    }
                    Poly h(pc.size() + g.size() - 1, 0.0L);
                    for (std::size_t x = 0; x < pc.size(); ++x)
                        for (std::size_t y = 0; y < g.size(); ++y) h[x + y] += pc[x] * g[y];
                    Poly anti(h.size() + 1, 0.0L);
                    for (std::size_t b = 0; b < h.size(); ++b) anti[b + 1] = h[b] / static_cast<Real>(b + 1);

                    auto add_limit = [&](bool moves, Real offset, Real constant, Real sign) {
                        if (!moves) {
                            acc[o][alpha] += sign * horner_ld(anti, constant);
                            return;
                        }
                        Poly shifted = anti;
                        shift_in_place(shifted, offset);  // anti(u + offset)
                        for (std::size_t b = 0; b < shifted.size() && alpha + b <= out_degree; ++b)
                            acc[o][alpha + b] += sign * shifted[b];
                    };
                    add_limit(upper_moves, z0, len_p, 1.0L);
                    if (lower_moves) add_limit(true, z0 - len_q, 0, -1.0L);
                }
            }
        }
    }

    std::vector<std::vector<double>> pieces(n_out);
    for (std::size_t o = 0; o < n_out; ++o) pieces[o].assign(acc[o].begin(), acc[o].end());
    return PiecewisePolynomial(std::move(xs), std::move(pieces)).coalesced();
}

}  // namespace gallagher
