// Serial reference against the OpenMP version of each inner kernel. Sizes
// follow the shapes the library actually runs: the lemma's hermitian form over
// a few thousand frequencies, Selberg windows over (N, 2N], and the Toeplitz
// form of a correlation table.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gallagher/expsum.hpp"
#include "gallagher/kernels.hpp"

namespace {

using namespace gallagher;

std::vector<double> noise(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

// The norm kernel of the lemma: 2T sinc(2Tu), written out to keep the bench
// independent of the transforms module.
struct NormKernel {
    double T;
    double operator()(double u) const {
        const double x = 2 * T * u;
        return x == 0 ? 2 * T : 2 * T * std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
    }
};

template <bool Parallel>
void BM_hermitian_form(benchmark::State& state) {
    const auto spec = random_expsum(static_cast<std::size_t>(state.range(0)), 1);
    const NormKernel k{0.3};
    for (auto _ : state) {
        const double v = Parallel ? kernels::hermitian_form(spec.nu, spec.s, k)
                                  : kernels::hermitian_form_serial(spec.nu, spec.s, k);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) / 2);
}

template <bool Parallel>
void BM_window_sums(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto w = noise(static_cast<std::size_t>(state.range(1)), 2);
    const auto f = noise(n + w.size() - 1, 3);
    std::vector<double> out(n);
    for (auto _ : state) {
        if (Parallel) kernels::window_sums(f, 0, w, out);
        else kernels::window_sums_serial(f, 0, w, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

template <bool Parallel>
void BM_toeplitz_form(benchmark::State& state) {
    const auto f = noise(static_cast<std::size_t>(state.range(0)), 4);
    const auto corr = noise(2 * static_cast<std::size_t>(state.range(1)) + 1, 5);
    for (auto _ : state) {
        const double v = Parallel ? kernels::toeplitz_form(f, corr) : kernels::toeplitz_form_serial(f, corr);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * (2 * state.range(1) + 1));
}

}  // namespace

BENCHMARK(BM_hermitian_form<false>)->Name("hermitian_form/serial")->Arg(500)->Arg(2000)->Arg(8000)->UseRealTime();
BENCHMARK(BM_hermitian_form<true>)->Name("hermitian_form/openmp")->Arg(500)->Arg(2000)->Arg(8000)->UseRealTime();
BENCHMARK(BM_window_sums<false>)->Name("window_sums/serial")->Args({100000, 21})->Args({1000000, 321})->UseRealTime();
BENCHMARK(BM_window_sums<true>)->Name("window_sums/openmp")->Args({100000, 21})->Args({1000000, 321})->UseRealTime();
BENCHMARK(BM_toeplitz_form<false>)->Name("toeplitz_form/serial")->Args({10000, 16})->Args({100000, 256})->UseRealTime();
BENCHMARK(BM_toeplitz_form<true>)->Name("toeplitz_form/openmp")->Args({10000, 16})->Args({100000, 256})->UseRealTime();

BENCHMARK_MAIN();
