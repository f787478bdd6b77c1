#include "juliareal/classifier.hpp"
#include "juliareal/cubic_region.hpp"
#include "juliareal/heights.hpp"
#include "juliareal/orbit.hpp"
#include "juliareal/roots.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace juliareal;

namespace {

RealPolynomial random_poly(std::mt19937_64& rng, int degree)
{
    std::uniform_real_distribution<double> u(-3, 3);
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = u(rng);
    return RealPolynomial(c);
}

void BM_ComplexRoots(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    std::vector<RealPolynomial> polys;
    for (int k = 0; k < 64; ++k) polys.push_back(random_poly(rng, static_cast<int>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(complex_roots(polys[i++ % polys.size()]));
}
BENCHMARK(BM_ComplexRoots)->Arg(2)->Arg(4)->Arg(9)->Arg(27);

void BM_CriticalInterval(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    std::vector<RealPolynomial> polys;
    for (int k = 0; k < 64; ++k) polys.push_back(random_poly(rng, static_cast<int>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(critical_interval(polys[i++ % polys.size()]));
}
BENCHMARK(BM_CriticalInterval)->Arg(3)->Arg(9);

void BM_ScanCell(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(-6, 1), ub(-4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(scan_cell(ua(rng), ub(rng)));
}
BENCHMARK(BM_ScanCell);

void BM_BackwardOrbit(benchmark::State& state)
{
    const RealPolynomial p{-2, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(backward_orbit(p, Complex(1.0 / 3.0), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BackwardOrbit)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CanonicalHeight(benchmark::State& state)
{
    const RationalPolynomial p{Rational(-2), Rational(0), Rational(1)};
    for (auto _ : state) benchmark::DoNotOptimize(canonical_height(p, Rational(1, 3), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CanonicalHeight)->Arg(10)->Arg(16);

void BM_Render(benchmark::State& state)
{
    const RealPolynomial p{-1, 0, 1};
    const Window w{-2, 2, -1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(render_filled_julia(p, w, 256, 128, 256));
}
BENCHMARK(BM_Render)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
