#include "heokit/baselines.hpp"
#include "heokit/benchmarks.hpp"
#include "heokit/constrained.hpp"
#include "heokit/heo.hpp"
#include "heokit/modelopt.hpp"

#include <benchmark/benchmark.h>

using namespace heokit;

namespace {

void BM_Evaluate(benchmark::State& state) {
    const auto id = static_cast<bench::BenchmarkId>(state.range(0));
    const std::size_t dim = static_cast<std::size_t>(state.range(1));
    RandomStream rng(1);
    const Vector x = sample_uniform(bench::info(id).default_space(dim), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bench::evaluate(id, x));
    }
    state.SetLabel(std::string(bench::info(id).name));
}
BENCHMARK(BM_Evaluate)->ArgsProduct({benchmark::CreateDenseRange(0, 13, 1), {30}});

void BM_HeoStep(benchmark::State& state) {
    Objective f = bench::make_objective(bench::BenchmarkId::rastrigin, 30);
    heo::Params p;
    p.population = static_cast<std::size_t>(state.range(0));
    RandomStream rng(7);
    heo::SwarmState s = heo::init_swarm(p, f, rng);
    for (auto _ : state) {
        heo::step(s, f, p, rng);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(p.population));
}
BENCHMARK(BM_HeoStep)->Arg(20)->Arg(100);

void BM_Run(benchmark::State& state) {
    RunConfig cfg;
    cfg.population = 100;
    cfg.iterations = 100;
    cfg.record_history = false;
    const int algo = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Objective f = bench::make_objective(bench::BenchmarkId::sphere, 30);
        RunResult r;
        switch (algo) {
            case 0: {
                heo::Params p;
                p.population = cfg.population;
                p.iterations = cfg.iterations;
                r = heo::run(f, p, 1, false);
                break;
            }
            case 1: r = baselines::pso_run(f, cfg); break;
            case 2: r = baselines::gwo_run(f, cfg); break;
            case 3: r = baselines::ga_run(f, cfg); break;
            default: r = baselines::qpso_run(f, cfg); break;
        }
        benchmark::DoNotOptimize(r.best_cost);
    }
    static const char* names[] = {"heo", "pso", "gwo", "ga", "qpso"};
    state.SetLabel(names[algo]);
}
BENCHMARK(BM_Run)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_PenalizedVessel(benchmark::State& state) {
    const auto problem = constrained::pressure_vessel();
    const Vector x{1.0, 0.5, 55.0, 190.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(constrained::penalized(problem, x));
    }
}
BENCHMARK(BM_PenalizedVessel);

void BM_Train(benchmark::State& state) {
    const auto data = modelopt::make_blobs(static_cast<std::size_t>(state.range(0)), 7, 0.8, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(modelopt::train(data, 1.0, 100).weights);
    }
}
BENCHMARK(BM_Train)->Arg(750)->Arg(2857)->Unit(benchmark::kMillisecond);

void BM_TuneObjective(benchmark::State& state) {
    const auto data = modelopt::make_blobs(2857, 7, 0.8, 3);
    Objective f = modelopt::tune_objective(data, 3);
    const Vector x{1.0, 50.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.evaluate(x));
    }
}
BENCHMARK(BM_TuneObjective)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
