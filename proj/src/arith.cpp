#include "gallagher/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <new>

#include "gallagher/csv.hpp"
#include "gallagher/errors.hpp"
#include "gallagher/piecewise.hpp"

namespace gallagher {

bool LogPolynomial::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](double c) { return c == 0.0; });
}

int LogPolynomial::degree() const {
    for (std::size_t i = coefficients.size(); i-- > 0;)
        if (coefficients[i] != 0.0) return static_cast<int>(i);
    return 0;
}

double LogPolynomial::operator()(double u) const {
    return coefficients.empty() ? 0.0 : horner(coefficients, u);
}

double LogPolynomial::at_log(double x) const {
    return coefficients.empty() ? 0.0 : horner(coefficients, std::log(x));
}

LogPolynomial LogPolynomial::derivative() const {
    LogPolynomial d;
    for (std::size_t i = 1; i < coefficients.size(); ++i) d.coefficients.push_back(coefficients[i] * static_cast<double>(i));
    return d;
}

void ArithFnTable::require(long long a, long long b, const char* what) const {
    if (!covers(a, b))
        throw RangeError(std::string(what) + ": table '" + name + "' covers [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] but [" + std::to_string(a) + ", " + std::to_string(b) +
                         "] is needed");
}

double ArithFnTable::sup_norm(long long a, long long b) const {
    double best = 0;
    for (long long n = std::max(a, lo); n <= std::min(b, hi); ++n) best = std::max(best, std::abs((*this)(n)));
    return best;
}

namespace {

// d_k on [1, hi] as 32-bit counts (index 0 unused).
std::vector<std::uint32_t> divisor_sieve(int k, long long hi) {
    try {
        const auto size = static_cast<std::size_t>(hi) + 1;
        std::vector<std::uint32_t> cur(size, 1);
        cur[0] = 0;
        for (int step = 2; step <= k; ++step) {
            std::vector<std::uint32_t> next(size, 0);
            for (std::size_t m = 1; m < size; ++m) {
                const std::uint32_t v = cur[m];
                for (std::size_t n = m; n < size; n += m) {
                    const std::uint32_t sum = next[n] + v;
                    if (sum < v) throw ResourceError("divisor_table: d_k exceeds 32-bit range");
                    next[n] = sum;
                }
            }
            cur.swap(next);
        }
        return cur;
    } catch (const std::bad_alloc&) {
        throw ResourceError("divisor_table: out of memory for range end " + std::to_string(hi));
    }
}

// Solves the small symmetric system A x = b by Gaussian elimination with pivoting.
std::vector<long double> solve(std::vector<std::vector<long double>> A, std::vector<long double> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        if (A[c][c] == 0) throw DegenerateInputError("fit_gate: singular normal equations");
        for (std::size_t r = c + 1; r < n; ++r) {
            const long double f = A[r][c] / A[c][c];
            for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<long double> x(n);
    for (std::size_t c = n; c-- > 0;) {
        long double acc = b[c];
        for (std::size_t k = c + 1; k < n; ++k) acc -= A[c][k] * x[k];
        x[c] = acc / A[c][c];
    }
    return x;
}

}  // namespace

LogPolynomial log_polynomial_dk(int k) {
    constexpr double g = kEulerGamma;
    switch (k) {
        case 1: return {{1.0}};
        case 2: return {{2 * g, 1.0}};
        case 3: return {{3 * g * g - 3 * kStieltjes1, 3 * g, 0.5}};
        default: break;
    }
    throw UnsupportedError("log polynomial of d_k is only built in for k = 1, 2, 3");
}

LogPolynomial summatory_polynomial(const LogPolynomial& p) {
    LogPolynomial q{p.coefficients};
    LogPolynomial d = p.derivative();
    for (double sign = -1; !d.coefficients.empty(); sign = -sign, d = d.derivative())
        for (std::size_t i = 0; i < d.coefficients.size(); ++i) q.coefficients[i] += sign * d.coefficients[i];
    return q;
}

FitGate fit_gate(int k) {
    constexpr long long kLo = 100'000, kHi = 1'000'000;
    constexpr int kSamples = 4096;
    const auto Q = summatory_polynomial(log_polynomial_dk(k));
    const std::size_t dim = Q.coefficients.size();

    const auto d = divisor_sieve(k, kHi);
    std::vector<long double> partial(static_cast<std::size_t>(kHi) + 1, 0);
    for (std::size_t n = 1; n < partial.size(); ++n) partial[n] = partial[n - 1] + d[n];

    FitGate gate;
    gate.k = k;
    gate.centre = 0.5 * (std::log(static_cast<double>(kLo)) + std::log(static_cast<double>(kHi)));
    std::vector<std::vector<long double>> A(dim, std::vector<long double>(dim, 0));
    std::vector<long double> b(dim, 0);
    const double span = std::log(static_cast<double>(kHi) / kLo);
    for (int i = 0; i < kSamples; ++i) {
        const auto x = static_cast<long long>(std::llround(kLo * std::exp(span * i / (kSamples - 1))));
        const long double target = partial[static_cast<std::size_t>(x)] / x;
        const long double t = std::log(static_cast<long double>(x)) - gate.centre;
        std::vector<long double> basis(dim, 1);
        for (std::size_t c = 1; c < dim; ++c) basis[c] = basis[c - 1] * t;
        for (std::size_t r = 0; r < dim; ++r) {
            b[r] += basis[r] * target;
            for (std::size_t c = 0; c < dim; ++c) A[r][c] += basis[r] * basis[c];
        }
    }
    for (long double c : solve(A, b)) gate.fitted.push_back(static_cast<double>(c));
    gate.derived = taylor_shift(Q.coefficients, gate.centre);
    for (std::size_t c = 0; c < dim; ++c)
        gate.worst_relative =
            std::max(gate.worst_relative, std::abs(gate.fitted[c] - gate.derived[c]) / std::abs(gate.derived[c]));
    gate.passed = gate.worst_relative < 0.01;
    return gate;
}

const FitGate& fit_gate_cached(int k) {
    static std::mutex mutex;
    static std::map<int, FitGate> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, fit_gate(k)).first;
    return it->second;
}

ArithFnTable divisor_table(int k, long long lo, long long hi) {
    if (k < 1) throw ParameterDomainError("divisor_table: k must be a positive integer");
    if (lo < 1 || hi < lo) throw ParameterDomainError("divisor_table: need 1 <= lo <= hi");
    if (hi > kMaxTableEnd) throw ResourceError("divisor_table: range end exceeds 1e8");
    const auto d = divisor_sieve(k, hi);
    ArithFnTable t{lo, hi, {}, "d" + std::to_string(k), std::nullopt};
    t.values.assign(d.begin() + lo, d.begin() + hi + 1);
    if (k <= 3) {
        const auto& gate = fit_gate_cached(k);
        if (!gate.passed)
            throw PreconditionError("log polynomial of d_" + std::to_string(k) + " failed the fit gate (relative error " +
                                    csv::format(gate.worst_relative) + ")");
        t.log_poly = log_polynomial_dk(k);
    }
    return t;
}

ArithFnTable balanced_part(const ArithFnTable& f) {
    if (!f.log_poly) throw PreconditionError("balanced_part: table '" + f.name + "' has no log polynomial");
    ArithFnTable out{f.lo, f.hi, f.values, f.name, LogPolynomial{}};
    if (!f.log_poly->is_zero()) {
        out.name = "balanced(" + f.name + ")";
        for (long long n = f.lo; n <= f.hi; ++n)
            out.values[static_cast<std::size_t>(n - f.lo)] -= f.log_poly->at_log(static_cast<double>(n));
    }
    return out;
}

ArithFnTable zero_table(long long lo, long long hi) {
    if (lo < 1 || hi < lo) throw ParameterDomainError("zero_table: need 1 <= lo <= hi");
    return {lo, hi, std::vector<double>(static_cast<std::size_t>(hi - lo + 1), 0.0), "zero", LogPolynomial{}};
}

ArithFnTable read_arith_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterDomainError("cannot open function file '" + path + "'");
    ArithFnTable t;
    t.name = "custom";
    std::string line;
    bool first_data = true;
    while (std::getline(in, line)) {
        const auto cells = csv::split(line);
        if (cells.empty() || cells[0].empty() || cells[0][0] == '#') continue;
        if (cells[0] == "logpoly") {
            if (!first_data) throw ParameterDomainError("logpoly row must precede the data rows");
            LogPolynomial p;
            for (std::size_t i = 1; i < cells.size(); ++i) p.coefficients.push_back(csv::parse_double(cells[i], "logpoly"));
            t.log_poly = p;
            continue;
        }
        if (cells[0] == "n") continue;  // column header
        if (cells.size() != 2) throw ParameterDomainError("function rows must be n,f(n)");
        const long long n = csv::parse_int(cells[0], "n");
        const double v = csv::parse_double(cells[1], "f(n)");
        if (first_data) {
            if (n < 1) throw ParameterDomainError("function table must start at n >= 1");
            t.lo = n;
            first_data = false;
        } else if (n != t.lo + static_cast<long long>(t.values.size())) {
            throw ParameterDomainError("function rows must list consecutive n");
        }
        t.values.push_back(v);
    }
    if (t.values.empty()) throw ParameterDomainError("function file has no data rows");
    t.hi = t.lo + static_cast<long long>(t.values.size()) - 1;
    return t;
}

}  // namespace gallagher
