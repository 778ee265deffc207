// Copyright (C) 2026 orbitlab authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernel for each parallel hot spot.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "orbitlab/explorer.hpp"
#include "orbitlab/irrationality.hpp"
#include "orbitlab/torus_forms.hpp"

using namespace orbitlab;

namespace {

SymbolicRealVector t4_rational() { return SymbolicRealVector::rational({1, 1, 0, 0, 0, 0}); }

void BM_IsotropicSerial(benchmark::State& state) {
    QuadLattice L = t4_model();
    SymbolicRealVector y = t4_rational();
    for (auto _ : state) benchmark::DoNotOptimize(find_isotropic_orthogonal_serial(L, y, state.range(0)));
}

void BM_IsotropicOmp(benchmark::State& state) {
    QuadLattice L = t4_model();
    SymbolicRealVector y = t4_rational();
    for (auto _ : state) benchmark::DoNotOptimize(find_isotropic_orthogonal(L, y, state.range(0)));
}

SplitBlockForm solver_target() {
    Eigen::MatrixXd C(2, 2);
    C << 1.1, 0.2, -0.1, 0.9;
    C /= std::sqrt(C.determinant());
    Eigen::MatrixXd D(2, 2);
    D << 0, 0.37, -0.37, 0;
    return {C, D};
}

ApproxOptions solver_options(int budget) {
    ApproxOptions o;
    o.budget = budget;
    o.stop_err = 0.0;  // every round runs, so both variants do the same work
    return o;
}

void BM_SolverSerial(benchmark::State& state) {
    const auto t = solver_target();
    const auto o = solver_options(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(approx_by_split_orbit_serial(t, o));
}

void BM_SolverOmp(benchmark::State& state) {
    const auto t = solver_target();
    const auto o = solver_options(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(approx_by_split_orbit(t, o));
}

struct Frontier {
    std::vector<detail::LdVec> points;
    std::vector<detail::LdMat> gens;
};

Frontier make_frontier(std::size_t size) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> nd;
    Frontier f;
    f.gens.assign(16, detail::LdMat(6, 6));
    for (auto& g : f.gens)
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) g(i, j) = nd(rng);
    f.points.assign(size, detail::LdVec(6));
    for (auto& p : f.points)
        for (int i = 0; i < 6; ++i) p(i) = nd(rng);
    return f;
}

void BM_FrontierSerial(benchmark::State& state) {
    const Frontier f = make_frontier(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(detail::expand_frontier_serial(f.points, f.gens));
}

void BM_FrontierOmp(benchmark::State& state) {
    const Frontier f = make_frontier(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(detail::expand_frontier_omp(f.points, f.gens));
}

}  // namespace

BENCHMARK(BM_IsotropicSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsotropicOmp)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolverSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolverOmp)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrontierSerial)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrontierOmp)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
