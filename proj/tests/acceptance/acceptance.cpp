// Acceptance suite. One PASS/FAIL line per criterion; tolerances are pinned
// below and must not be loosened to make a line go green.
//
//   heokit_acceptance                 run all criteria
//   heokit_acceptance --criterion N   run one
//   heokit_acceptance --rice FILE     also run the rice-dataset extension of 11

#include "heokit/benchmarks.hpp"
#include "heokit/constrained.hpp"
#include "heokit/harness.hpp"
#include "heokit/heo.hpp"
#include "heokit/modelopt.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

using namespace heokit;

namespace {

// --- pinned tolerances -----------------------------------------------------

constexpr double kRankGoldenMaxSeconds = 1.0;

constexpr std::size_t kHeoDim = 30;
constexpr std::size_t kHeoPopulation = 100;
constexpr std::size_t kHeoIterations = 1000;
constexpr double kHeoMaxRunSeconds = 120.0;
constexpr double kSphereThreshold = 1e-10;
constexpr int kSphereRequired = 4;
constexpr double kRastriginThreshold = 1e-8;
constexpr int kRastriginRequired = 3;
constexpr double kSchwefelThreshold = 1e-20;
constexpr int kSchwefelRequired = 3;

constexpr double kMinimizerTolerance = 1e-12;
constexpr int kNonnegativitySamples = 10000;
constexpr double kSuiteMaxSeconds = 10.0;

constexpr int kFuzzPairs = 50;
constexpr std::size_t kFuzzIterations = 200;

constexpr double kColumnRatio = 1.01;
constexpr int kColumnGrid = 1000;
constexpr double kColumnMaxSeconds = 60.0;

constexpr long kVesselSamples = 1000000;
constexpr double kVesselConstraintTolerance = 1e-9;
constexpr double kVesselMaxSeconds = 120.0;

constexpr int kGradientInstances = 20;
constexpr double kGradientRelError = 1e-6;

constexpr double kBlobAccuracy = 0.95;
constexpr std::uint64_t kGridEvaluations = 2500;
constexpr double kRiceAccuracy = 0.92;

constexpr int kMetricMatrices = 1000;

const std::uint64_t kSeeds[] = {1, 2, 3, 4, 5};

// ---------------------------------------------------------------------------

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string rice_path;

// 1 -------------------------------------------------------------------------

Outcome rank_golden() {
    const auto t0 = Clock::now();
    const harness::ResultTable table = harness::table3_fixture();
    const std::vector<std::string> uni{"F1", "F2", "F3", "F4", "F5", "F6", "F7"};
    const std::vector<std::string> multi{"F8", "F9", "F10", "F11", "F12", "F13", "F14"};
    struct Row {
        const char* label;
        harness::RankSummary summary;
        std::vector<std::string> printed;
    };
    const std::vector<Row> rows{
        {"unimodal", harness::dense_rank_aggregate(table, uni),
         {"5.7142", "4.5714", "2.7142", "1.5714", "3.7142", "2.7142"}},
        {"multimodal", harness::dense_rank_aggregate(table, multi),
         {"5.4285", "3.5714", "1.5714", "1.5714", "4.0000", "4.1428"}},
        {"total", harness::dense_rank_aggregate(table),
         {"5.5714", "4.0714", "2.1428", "1.5714", "3.8571", "3.4285"}},
    };
    const double elapsed = seconds_since(t0);

    Outcome o{true, ""};
    for (const Row& r : rows) {
        std::string got;
        bool same = true;
        for (std::size_t j = 0; j < r.printed.size(); ++j) {
            const std::string v = r.summary.formatted(j);
            got += (j ? " " : "") + v;
            same = same && v == r.printed[j];
        }
        if (!same) {
            o.pass = false;
            std::string want;
            for (const auto& p : r.printed) {
                want += (want.empty() ? "" : " ") + p;
            }
            o.detail += fmt("%s got [%s] want [%s]; ", r.label, got.c_str(), want.c_str());
        } else {
            o.detail += fmt("%s ok; ", r.label);
        }
    }
    if (elapsed >= kRankGoldenMaxSeconds) {
        o.pass = false;
    }
    o.detail += fmt("%.3f s", elapsed);
    return o;
}

// 2-4 -----------------------------------------------------------------------

Outcome heo_threshold(bench::BenchmarkId id, double threshold, int required) {
    heo::Params p;
    p.population = kHeoPopulation;
    p.iterations = kHeoIterations;
    int hits = 0;
    double slowest = 0.0;
    std::string costs;
    for (std::uint64_t seed : kSeeds) {
        Objective f = bench::make_objective(id, kHeoDim);
        const auto t0 = Clock::now();
        const RunResult r = heo::run(f, p, seed, false);
        slowest = std::max(slowest, seconds_since(t0));
        if (r.best_cost <= threshold) {
            ++hits;
        }
        costs += fmt("%s%.3e", costs.empty() ? "" : " ", r.best_cost);
    }
    return {hits >= required && slowest < kHeoMaxRunSeconds,
            fmt("%d/5 <= %.0e (need %d) [%s], slowest run %.2f s", hits, threshold, required,
                costs.c_str(), slowest)};
}

Outcome heo_sphere() {
    return heo_threshold(bench::BenchmarkId::sphere, kSphereThreshold, kSphereRequired);
}
Outcome heo_rastrigin() {
    return heo_threshold(bench::BenchmarkId::rastrigin, kRastriginThreshold, kRastriginRequired);
}
Outcome heo_schwefel221() {
    return heo_threshold(bench::BenchmarkId::schwefel221, kSchwefelThreshold, kSchwefelRequired);
}

// 5 -------------------------------------------------------------------------

Outcome benchmark_suite() {
    const auto t0 = Clock::now();
    std::mt19937_64 gen(20240501);
    int bad_min = 0;
    int negative = 0;
    double worst_min = 0.0;
    for (const auto& b : bench::registry()) {
        for (std::size_t dim : {2, 10, 30}) {
            const double at_min = bench::evaluate(b.id, b.minimizer_point(dim));
            worst_min = std::max(worst_min, std::abs(at_min));
            if (!(std::abs(at_min) <= kMinimizerTolerance)) {
                ++bad_min;
            }
            std::uniform_real_distribution<double> u(b.lower, b.upper);
            std::vector<double> x(dim);
            for (int s = 0; s < kNonnegativitySamples; ++s) {
                for (double& v : x) {
                    v = u(gen);
                }
                if (!(bench::evaluate(b.id, x) >= 0.0)) {
                    ++negative;
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    return {bad_min == 0 && negative == 0 && elapsed < kSuiteMaxSeconds,
            fmt("%d minimizer failures (worst |f| %.1e), %d negative samples, %.2f s", bad_min,
                worst_min, negative, elapsed)};
}

// 6 -------------------------------------------------------------------------

Outcome bound_fuzz() {
    std::mt19937_64 gen(777);
    const std::size_t dims[] = {2, 5, 10, 30};
    long outside = 0;
    long checked = 0;
    for (int pair = 0; pair < kFuzzPairs; ++pair) {
        const std::uint64_t seed = gen();
        const auto& b = bench::registry()[gen() % bench::benchmark_count];
        const std::size_t dim = dims[gen() % 4];
        for (const auto& algo : harness::algorithm_names()) {
            Objective f = bench::make_objective(b.id, dim);
            RunConfig cfg;
            cfg.population = 20;
            cfg.iterations = kFuzzIterations;
            cfg.seed = seed;
            cfg.record_history = false;
            const SearchSpace& space = f.space();
            const RunResult r = harness::run_algorithm(
                algo, f, cfg, {}, [&](const IterationView& view) {
                    for (const Vector& x : view.positions) {
                        ++checked;
                        if (!space.contains(x)) {
                            ++outside;
                        }
                    }
                });
            ++checked;
            if (!space.contains(r.best_position)) {
                ++outside;
            }
        }
    }
    return {outside == 0 && checked > 0,
            fmt("%ld of %ld positions outside the space", outside, checked)};
}

// 7 -------------------------------------------------------------------------

Outcome determinism() {
    int mismatches = 0;
    int runs = 0;
    for (const char* name : {"sphere", "rosenbrock", "rastrigin", "ackley", "levy"}) {
        for (const auto& algo : harness::algorithm_names()) {
            for (std::uint64_t seed : {3ULL, 99ULL}) {
                RunConfig cfg;
                cfg.population = 20;
                cfg.iterations = 150;
                cfg.seed = seed;
                Objective a = harness::make_problem(name, 10);
                Objective b = harness::make_problem(name, 10);
                const RunResult ra = harness::run_algorithm(algo, a, cfg);
                const RunResult rb = harness::run_algorithm(algo, b, cfg);
                ++runs;
                if (ra.best_cost != rb.best_cost || ra.best_position != rb.best_position ||
                    ra.history != rb.history || ra.evaluations != rb.evaluations) {
                    ++mismatches;
                }
            }
        }
    }
    return {mismatches == 0, fmt("%d of %d repeated runs differ", mismatches, runs)};
}

// 8 -------------------------------------------------------------------------

constrained::Solution best_heo_solution(const constrained::ConstrainedProblem& problem) {
    heo::Params p;
    p.population = kHeoPopulation;
    p.iterations = kHeoIterations;
    p.skip_trigger = 1;
    constrained::Solution best;
    best.cost = std::numeric_limits<double>::infinity();
    for (std::uint64_t seed : kSeeds) {
        const constrained::Solution s = constrained::solve(
            problem, [&](Objective& f) { return heo::run(f, p, seed, false); });
        if (s.feasible && s.cost < best.cost) {
            best = s;
        }
    }
    return best;
}

Outcome tubular_column_oracle() {
    const auto t0 = Clock::now();
    const oracle::GridBest grid = oracle::column_grid(kColumnGrid);
    const constrained::Solution s = best_heo_solution(constrained::tubular_column());
    const double elapsed = seconds_since(t0);
    const bool ok = s.feasible && oracle::column_feasible(s.x[0], s.x[1]) &&
                    s.cost <= kColumnRatio * grid.cost && elapsed < kColumnMaxSeconds;
    return {ok, fmt("HEO %.6f at (%.5f, %.5f) vs grid %.6f at (%.5f, %.5f), ratio %.5f, %.1f s",
                    s.cost, s.x.empty() ? 0.0 : s.x[0], s.x.empty() ? 0.0 : s.x[1], grid.cost,
                    grid.d, grid.t, s.cost / grid.cost, elapsed)};
}

// 9 -------------------------------------------------------------------------

Outcome pressure_vessel_oracle() {
    const auto t0 = Clock::now();
    const oracle::SampleBest sample = oracle::vessel_sampling(kVesselSamples, 1);
    const constrained::Solution s = best_heo_solution(constrained::pressure_vessel());
    const double elapsed = seconds_since(t0);
    double worst_g = -std::numeric_limits<double>::infinity();
    for (double g : s.constraint_values) {
        worst_g = std::max(worst_g, g);
    }
    const bool ok = s.feasible && oracle::vessel_feasible(s.x.data()) &&
                    worst_g <= kVesselConstraintTolerance && s.cost <= sample.cost &&
                    elapsed < kVesselMaxSeconds;
    return {ok, fmt("HEO %.4f (max g %.2e) vs best of %ld feasible samples %.4f, %.1f s", s.cost,
                    worst_g, sample.accepted, sample.cost, elapsed)};
}

// 10 ------------------------------------------------------------------------

Outcome gradient_check() {
    std::mt19937_64 gen(1010);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> logc(-3.0, 3.0);
    double worst = 0.0;
    for (int inst = 0; inst < kGradientInstances; ++inst) {
        const std::size_t m = 5 + gen() % 46;
        const std::size_t d = 1 + gen() % 8;
        std::vector<Vector> x(m, Vector(d));
        std::vector<int> y(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (double& v : x[i]) {
                v = 2.0 * normal(gen);
            }
            y[i] = static_cast<int>(gen() % 2);
        }
        Vector w(d + 1);
        for (double& v : w) {
            v = normal(gen);
        }
        const double c = std::exp(logc(gen));
        const Vector analytic = modelopt::gradient(w, x, y, c);
        const Vector numeric = oracle::central_gradient(
            [&](const std::vector<double>& ww) { return oracle::logistic_objective(ww, x, y, c); },
            w);
        double diff = 0.0, na = 0.0, nn = 0.0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            diff += (analytic[j] - numeric[j]) * (analytic[j] - numeric[j]);
            na += analytic[j] * analytic[j];
            nn += numeric[j] * numeric[j];
        }
        const double rel = std::sqrt(diff) / std::max({std::sqrt(na), std::sqrt(nn), 1e-300});
        worst = std::max(worst, rel);
    }
    return {worst <= kGradientRelError,
            fmt("max relative error %.2e over %d instances", worst, kGradientInstances)};
}

// 11 ------------------------------------------------------------------------

double heo_tuned_accuracy(const modelopt::Dataset& data, std::uint64_t seed) {
    const auto [train, test] = modelopt::train_test_split(data, 0.25, seed);
    heo::Params p;
    p.population = 50;
    p.iterations = 50;
    const modelopt::TuneReport r = modelopt::tune(
        "heo", [&](Objective& f) { return heo::run(f, p, seed, false); }, train, test, seed);
    return r.test_metrics.accuracy;
}

Outcome tuning_pipeline() {
    const modelopt::Dataset blobs = modelopt::make_blobs(1000, 7, 0.8, 42);
    const double accuracy = heo_tuned_accuracy(blobs, 42);

    const auto [train, test] = modelopt::train_test_split(blobs, 0.25, 42);
    Objective f = modelopt::tune_objective(train, 42);
    const std::vector<std::size_t> sizes{50, 50};
    const RunResult grid = modelopt::grid_search(f, sizes);
    const bool grid_ok = grid.evaluations == kGridEvaluations && f.eval_count() == kGridEvaluations;

    Outcome o{accuracy >= kBlobAccuracy && grid_ok,
              fmt("blobs accuracy %.4f; grid evaluations %llu", accuracy,
                  static_cast<unsigned long long>(f.eval_count()))};
    if (rice_path.empty()) {
        o.detail += "; rice extension skipped (no --rice file)";
        return o;
    }
    try {
        const modelopt::Dataset rice = modelopt::load_csv(rice_path);
        const auto counts = rice.class_counts();
        const double rice_acc = heo_tuned_accuracy(rice, 42);
        const bool rice_ok = rice.rows() == 3810 && rice_acc >= kRiceAccuracy;
        o.pass = o.pass && rice_ok;
        o.detail += fmt("; rice %zu rows (%zu/%zu) accuracy %.4f", rice.rows(), counts[0],
                        counts[1], rice_acc);
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail += std::string("; rice: ") + e.what();
    }
    return o;
}

// 12 ------------------------------------------------------------------------

Outcome metric_identities() {
    std::mt19937_64 gen(1212);
    int violations = 0;
    for (int k = 0; k < kMetricMatrices; ++k) {
        modelopt::ConfusionMatrix cm;
        do {
            cm = {gen() % 60, gen() % 60, gen() % 60, gen() % 60};
            if (k % 10 == 0) {
                // force empty classes now and then
                (gen() % 2 ? cm.tp : cm.fp) = 0;
                (gen() % 2 ? cm.fn : cm.tn) = 0;
            }
        } while (cm.total() == 0);
        const modelopt::Metrics m = modelopt::metrics(cm);
        const double tp = static_cast<double>(cm.tp), tn = static_cast<double>(cm.tn);
        const double fp = static_cast<double>(cm.fp), fn = static_cast<double>(cm.fn);
        bool ok = m.accuracy == (tp + tn) / (tp + tn + fp + fn);
        ok = ok && m.recall == m.sensitivity;
        if (cm.tp + cm.fn > 0) {
            ok = ok && m.sensitivity == tp / (tp + fn);
        }
        if (cm.tn + cm.fp > 0) {
            ok = ok && m.specificity == tn / (tn + fp);
        }
        if (cm.tp + cm.fp > 0) {
            ok = ok && m.precision == tp / (tp + fp);
        }
        if (m.precision + m.recall > 0.0) {
            ok = ok && m.f1 == 2.0 * (m.precision * m.recall) / (m.precision + m.recall);
        } else {
            ok = ok && m.f1 == 0.0;
        }
        const bool zero_den = cm.tp + cm.fn == 0 || cm.tn + cm.fp == 0 || cm.tp + cm.fp == 0 ||
                              m.precision + m.recall == 0.0;
        ok = ok && m.undefined_ratio == zero_den;
        if (!ok) {
            ++violations;
        }
    }
    return {violations == 0,
            fmt("%d of %d confusion matrices violate an identity", violations, kMetricMatrices)};
}

struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> check;
};

const std::vector<Criterion> kCriteria{
    {1, "rank_golden", rank_golden},
    {2, "heo_sphere", heo_sphere},
    {3, "heo_rastrigin", heo_rastrigin},
    {4, "heo_schwefel221", heo_schwefel221},
    {5, "benchmark_suite", benchmark_suite},
    {6, "bound_fuzz", bound_fuzz},
    {7, "determinism", determinism},
    {8, "tubular_column_oracle", tubular_column_oracle},
    {9, "pressure_vessel_oracle", pressure_vessel_oracle},
    {10, "gradient_check", gradient_check},
    {11, "tuning_pipeline", tuning_pipeline},
    {12, "metric_identities", metric_identities},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (arg == "--rice" && i + 1 < argc) {
            rice_path = argv[++i];
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N] [--rice FILE]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(kCriteria.size())) {
        std::fprintf(stderr, "criterion must be 1..%zu\n", kCriteria.size());
        return 2;
    }

    int failed = 0;
    int ran = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.number != only) {
            continue;
        }
        ++ran;
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %2d %-24s %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name,
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) {
            ++failed;
        }
    }
    if (ran > 1) {
        std::printf("%d/%d criteria passed\n", ran - failed, ran);
    }
    return failed == 0 ? 0 : 1;
}
