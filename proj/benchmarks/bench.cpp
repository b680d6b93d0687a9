#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "leland/assembly.hpp"
#include "leland/banded.hpp"
#include "leland/mesh.hpp"
#include "leland/model.hpp"
#include "leland/oracles.hpp"
#include "leland/presets.hpp"
#include "leland/timestepper.hpp"

namespace {

leland::Mesh1D standard_mesh(double h, leland::ElementOrder order) {
    const double lnK = std::log(100.0);
    return leland::build_aligned(lnK + 2.0, h, lnK, order);
}

leland::GlobalSystem standard_system(const leland::Mesh1D& mesh, double K) {
    return leland::assemble(mesh, 0.0, std::exp(mesh.element_edges.back()) - K);
}

void bm_assemble(benchmark::State& state, leland::ElementOrder order) {
    const double h = 8.0 / static_cast<double>(state.range(0));
    auto mesh = standard_mesh(h, order);
    for (auto _ : state) {
        auto sys = standard_system(mesh, 100.0);
        benchmark::DoNotOptimize(sys.b_M.data());
    }
    state.SetComplexityN(state.range(0));
}

void bm_assemble_p1(benchmark::State& state) { bm_assemble(state, leland::ElementOrder::P1); }
void bm_assemble_p2(benchmark::State& state) { bm_assemble(state, leland::ElementOrder::P2); }

void bm_banded_solve(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const std::size_t hb = 2;
    leland::BandedMatrix A(n, hb);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i >= hb ? i - hb : 0; j <= std::min(n - 1, i + hb); ++j)
            A.set(i, j, i == j ? 8.0 + dist(rng) : dist(rng));
    }
    std::vector<double> b(n);
    for (auto& v : b) v = dist(rng);
    leland::BandedLU lu(A);
    for (auto _ : state) {
        auto x = lu.solve(b);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetComplexityN(state.range(0));
}

void bm_step(benchmark::State& state) {
    leland::MarketParams mp;
    mp.c = 0.01;
    const double h = 8.0 / static_cast<double>(state.range(0));
    auto mesh = standard_mesh(h, leland::ElementOrder::P1);
    auto sys = standard_system(mesh, mp.K);
    leland::SchemeConfig cfg;
    cfg.d_tau = 1e-3;
    cfg.Le = leland::leland_number(mp);
    std::vector<double> u(mesh.n_interior());
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = leland::initial_profile(mesh.nodes[i + 1], mp.K);
    for (auto _ : state) {
        auto next = leland::step(sys, u, cfg, cfg.theta, cfg.d_tau);
        benchmark::DoNotOptimize(next.data());
    }
    state.SetComplexityN(state.range(0));
}

void bm_full_run(benchmark::State& state) {
    auto p = leland::find_preset("le04-coarse");
    auto mesh = standard_mesh(p->h, p->order);
    auto sys = standard_system(mesh, p->market.K);
    leland::SchemeConfig cfg;
    cfg.d_tau = p->d_tau;
    cfg.theta = p->theta;
    cfg.n_rannacher = p->n_rannacher;
    cfg.Le = leland::leland_number(p->market);
    for (auto _ : state) {
        auto history = leland::run(sys, mesh, p->market, cfg);
        benchmark::DoNotOptimize(history.states.data());
    }
}

void bm_fdm_run(benchmark::State& state) {
    leland::MarketParams mp;
    mp.c = 0.01;
    leland::FdmConfig fc;
    fc.n_space = 133;
    fc.d_tau = 1e-3;
    const double R = std::log(mp.K) + 2.0;
    for (auto _ : state) {
        auto history = leland::fdm_solve(mp, R, fc);
        benchmark::DoNotOptimize(history.states.data());
    }
}

}  // namespace

BENCHMARK(bm_assemble_p1)->Arg(80)->Arg(160)->Arg(320)->Complexity(benchmark::oN);
BENCHMARK(bm_assemble_p2)->Arg(80)->Arg(160)->Arg(320)->Complexity(benchmark::oN);
BENCHMARK(bm_banded_solve)->Arg(64)->Arg(256)->Arg(1024)->Complexity(benchmark::oN);
BENCHMARK(bm_step)->Arg(80)->Arg(160)->Arg(320)->Complexity(benchmark::oN);
BENCHMARK(bm_full_run);
BENCHMARK(bm_fdm_run);

BENCHMARK_MAIN();
