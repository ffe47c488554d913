#include "cli.hpp"

#include "heokit/benchmarks.hpp"
#include "heokit/constrained.hpp"
#include "heokit/harness.hpp"
#include "heokit/modelopt.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace heokit::cli {

namespace {

using harness::ConfigError;

struct Options {
    std::vector<std::string> functions;
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::size_t dim = 30;
    std::size_t iters = 1000;
    std::size_t pop = 100;
    std::size_t reps = 30;
    std::size_t jobs = 1;
    std::uint64_t seed = 0;
    std::string out;
    std::string history_out;
    std::string input;
    std::string data;
    double test_fraction = 0.25;
    std::size_t grid = 50;
    bool skip_symmetric = false;
    unsigned cmax = 5;
    unsigned amax = 10;
    double escape_spread = 0.5;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

std::string join(const std::vector<std::string>& names) {
    std::string s;
    for (const auto& n : names) {
        s += s.empty() ? n : ", " + n;
    }
    return s;
}

harness::AlgorithmSettings settings_from(const Options& o) {
    harness::AlgorithmSettings s;
    s.heo.skip_trigger = o.cmax;
    s.heo.energy_ceiling = o.amax;
    s.heo.escape_spread = o.escape_spread;
    s.heo.skip_symmetric = o.skip_symmetric;
    return s;
}

void check_algorithms(const std::vector<std::string>& names) {
    for (const auto& a : names) {
        if (!harness::is_algorithm(a)) {
            throw ConfigError("unknown algorithm '" + a +
                              "'; valid names: " + join(harness::algorithm_names()));
        }
    }
}

harness::Format format_for(const std::string& path) {
    return path.size() >= 5 && path.ends_with(".json") ? harness::Format::json
                                                       : harness::Format::csv;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f || !(f << text)) {
        throw std::runtime_error("cannot write " + path);
    }
}

int cmd_list(std::ostream& out) {
    out << "algorithms:\n";
    for (const auto& a : harness::algorithm_names()) {
        out << "  " << a << '\n';
    }
    out << "functions:\n";
    for (const auto& b : bench::registry()) {
        char line[96];
        std::snprintf(line, sizeof line, "  %-12s %-4s %-14s %s\n", std::string(b.name).c_str(),
                      std::string(b.label).c_str(), std::string(b.title).c_str(),
                      b.modality == bench::Modality::unimodal ? "unimodal" : "multimodal");
        out << line;
    }
    out << "engineering problems:\n";
    for (const auto& p : constrained::problem_names()) {
        out << "  " << p << '\n';
    }
    return exit_ok;
}

int cmd_bench(const Options& o, std::ostream& out) {
    harness::ExperimentPlan plan;
    plan.algorithms = o.algorithms.empty() ? harness::algorithm_names() : o.algorithms;
    check_algorithms(plan.algorithms);
    if (o.functions.empty()) {
        for (const auto& b : bench::registry()) {
            plan.problems.push_back({std::string(b.name), o.dim});
        }
    } else {
        for (const auto& f : o.functions) {
            plan.problems.push_back({f, o.dim});
        }
    }
    plan.repetitions = o.reps;
    plan.base_seed = o.seed;
    plan.population = o.pop;
    plan.iterations = o.iters;
    plan.settings = settings_from(o);
    plan.record_history = !o.history_out.empty();
    plan.jobs = o.jobs;

    const harness::ResultTable table = harness::run_experiment(plan);

    char line[160];
    std::snprintf(line, sizeof line, "%-14s %-6s %-12s %-12s %s\n", "problem", "algo", "mean", "std",
                  "s/1000 iters");
    out << line;
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
        for (std::size_t j = 0; j < table.columns().size(); ++j) {
            const auto& c = table.at(i, j);
            std::snprintf(line, sizeof line, "%-14s %-6s %-12s %-12s %s\n",
                          table.rows()[i].c_str(), table.columns()[j].c_str(),
                          sci(c.mean_cost).c_str(), sci(c.std_cost).c_str(),
                          sci(c.time_per_1000_iterations()).c_str());
            out << line;
        }
    }
    if (!o.out.empty()) {
        harness::export_table(table, format_for(o.out), o.out);
    }
    if (!o.history_out.empty()) {
        harness::export_history(table, o.history_out);
    }
    return exit_ok;
}

int cmd_engineer(const Options& o, std::ostream& out) {
    std::vector<std::string> problems = o.problems;
    if (problems.empty()) {
        problems = {"pressure_vessel", "tubular_column"};
    }
    const auto algorithms = o.algorithms.empty() ? harness::algorithm_names() : o.algorithms;
    check_algorithms(algorithms);
    std::vector<constrained::ConstrainedProblem> defs;
    for (const auto& name : problems) {
        auto p = constrained::find_problem(name);
        if (!p) {
            throw ConfigError("unknown engineering problem '" + name +
                              "'; valid names: " + join(constrained::problem_names()));
        }
        defs.push_back(std::move(*p));
    }
    if (o.reps < 1) {
        throw ConfigError("--reps must be at least 1");
    }
    const harness::AlgorithmSettings settings = settings_from(o);

    nlohmann::ordered_json report = nlohmann::ordered_json::object();
    for (const auto& problem : defs) {
        out << problem.name << '\n';
        char line[256];
        std::snprintf(line, sizeof line, "  %-6s %-12s %-12s %-12s %-9s %s\n", "algo", "mean", "std",
                      "best", "feasible", "best x");
        out << line;
        nlohmann::ordered_json per_problem = nlohmann::ordered_json::object();
        for (const auto& algo : algorithms) {
            std::vector<constrained::Solution> runs;
            for (std::size_t r = 0; r < o.reps; ++r) {
                const RunConfig config{o.pop, o.iters, o.seed + r, false};
                runs.push_back(constrained::solve(problem, [&](Objective& obj) {
                    return harness::run_algorithm(algo, obj, config, settings);
                }));
            }
            double mean = 0.0;
            std::size_t best = 0;
            std::size_t n_feasible = 0;
            for (std::size_t r = 0; r < runs.size(); ++r) {
                mean += runs[r].cost;
                n_feasible += runs[r].feasible ? 1 : 0;
                // feasible solutions first, then lower cost
                if ((runs[r].feasible && !runs[best].feasible) ||
                    (runs[r].feasible == runs[best].feasible && runs[r].cost < runs[best].cost)) {
                    best = r;
                }
            }
            mean /= static_cast<double>(runs.size());
            double ss = 0.0;
            for (const auto& s : runs) {
                ss += (s.cost - mean) * (s.cost - mean);
            }
            const double sd = std::sqrt(ss / static_cast<double>(runs.size()));
            std::string xs;
            for (double v : runs[best].x) {
                xs += (xs.empty() ? "" : " ") + sci(v);
            }
            std::snprintf(line, sizeof line, "  %-6s %-12s %-12s %-12s %zu/%-7zu %s\n", algo.c_str(),
                          sci(mean).c_str(), sci(sd).c_str(), sci(runs[best].cost).c_str(),
                          n_feasible, runs.size(), xs.c_str());
            out << line;

            nlohmann::ordered_json j_runs = nlohmann::ordered_json::array();
            for (const auto& s : runs) {
                nlohmann::json js = s;
                j_runs.push_back(nlohmann::ordered_json(js));
            }
            per_problem[algo] = {{"mean", mean},
                                 {"std", sd},
                                 {"feasible_runs", n_feasible},
                                 {"best", nlohmann::ordered_json(nlohmann::json(runs[best]))},
                                 {"runs", std::move(j_runs)}};
        }
        report[problem.name] = std::move(per_problem);
    }
    if (!o.out.empty()) {
        write_text(o.out, report.dump(2) + "\n");
    }
    return exit_ok;
}

int cmd_tune(const Options& o, std::ostream& out) {
    if (o.data.empty()) {
        throw ConfigError("tune needs --data <csv>");
    }
    std::vector<std::string> algorithms = o.algorithms;
    if (algorithms.empty()) {
        algorithms = {"heo", "grid"};
    }
    for (const auto& a : algorithms) {
        if (a != "grid" && !harness::is_algorithm(a)) {
            throw ConfigError("unknown tuner '" + a + "'; valid names: " +
                              join(harness::algorithm_names()) + ", grid");
        }
    }
    if (o.grid < 1) {
        throw ConfigError("--grid must be at least 1");
    }
    const modelopt::Dataset data = modelopt::load_csv(o.data);
    const auto counts = data.class_counts();
    out << o.data << ": " << data.rows() << " rows, " << data.cols() << " features, "
        << data.class_names[0] << "=" << counts[0] << " " << data.class_names[1] << "="
        << counts[1] << '\n';
    const auto [train_set, test_set] = modelopt::train_test_split(data, o.test_fraction, o.seed);
    const harness::AlgorithmSettings settings = settings_from(o);

    char line[256];
    std::snprintf(line, sizeof line, "%-6s %-12s %-8s %-12s %-9s %-9s %-9s %-9s %s\n", "tuner", "C",
                  "iters", "val_mse", "accuracy", "precision", "recall", "f1", "evals");
    out << line;
    nlohmann::ordered_json report = nlohmann::ordered_json::array();
    for (const auto& a : algorithms) {
        modelopt::Optimizer optimize;
        if (a == "grid") {
            const std::size_t n = o.grid;
            optimize = [n](Objective& obj) {
                const std::vector<std::size_t> sizes{n, n};
                return modelopt::grid_search(obj, sizes);
            };
        } else {
            const RunConfig config{o.pop, o.iters, o.seed, false};
            optimize = [a, config, settings](Objective& obj) {
                return harness::run_algorithm(a, obj, config, settings);
            };
        }
        const auto r = modelopt::tune(a, optimize, train_set, test_set, o.seed);
        std::snprintf(line, sizeof line, "%-6s %-12s %-8d %-12s %-9.4f %-9.4f %-9.4f %-9.4f %llu\n",
                      a.c_str(), sci(r.best_c).c_str(), r.best_max_iter,
                      sci(r.validation_mse).c_str(), r.test_metrics.accuracy,
                      r.test_metrics.precision, r.test_metrics.recall, r.test_metrics.f1,
                      static_cast<unsigned long long>(r.evaluations));
        out << line;
        report.push_back(nlohmann::ordered_json(nlohmann::json(r)));
    }
    if (!o.out.empty()) {
        write_text(o.out, report.dump(2) + "\n");
    }
    return exit_ok;
}

int cmd_rank(const Options& o, std::ostream& out) {
    if (o.input.empty()) {
        throw ConfigError("rank needs --input <file> or --input table3_fixture");
    }
    const harness::ResultTable table =
        o.input == "table3_fixture" ? harness::table3_fixture() : harness::import_table(o.input);

    std::vector<std::string> unimodal;
    std::vector<std::string> multimodal;
    bool all_benchmarks = true;
    for (const auto& row : table.rows()) {
        const auto id = bench::find(row);
        if (!id) {
            all_benchmarks = false;
            break;
        }
        (bench::info(*id).modality == bench::Modality::unimodal ? unimodal : multimodal)
            .push_back(row);
    }

    char cell[32];
    std::snprintf(cell, sizeof cell, "%-12s", "");
    out << cell;
    for (const auto& a : table.columns()) {
        std::snprintf(cell, sizeof cell, " %-8s", a.c_str());
        out << cell;
    }
    out << '\n';
    auto print_row = [&](const char* label, const harness::RankSummary& s) {
        std::snprintf(cell, sizeof cell, "%-12s", label);
        out << cell;
        for (std::size_t j = 0; j < s.algorithms.size(); ++j) {
            std::snprintf(cell, sizeof cell, " %-8s", s.formatted(j).c_str());
            out << cell;
        }
        out << '\n';
    };
    if (all_benchmarks && !unimodal.empty() && !multimodal.empty()) {
        print_row("unimodal", harness::dense_rank_aggregate(table, unimodal));
        print_row("multimodal", harness::dense_rank_aggregate(table, multimodal));
    }
    print_row("total", harness::dense_rank_aggregate(table));
    return exit_ok;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"heokit: Halfway Escape Optimization and reference metaheuristics"};
    app.name("heokit");
    app.require_subcommand(1);
    Options o;

    auto add_run_flags = [&o](CLI::App* sub) {
        sub->add_option("--algorithms", o.algorithms, "Comma-separated algorithm names")
            ->delimiter(',');
        sub->add_option("--iters", o.iters, "Iterations per run");
        sub->add_option("--pop", o.pop, "Population size");
        sub->add_option("--reps", o.reps, "Repetitions; run r uses seed + r");
        sub->add_option("--seed", o.seed, "Base seed");
        sub->add_option("--out", o.out, "Result file (.json for JSON, otherwise CSV)");
        sub->add_option("--cmax", o.cmax, "HEO skip trigger c_max")->check(CLI::PositiveNumber);
        sub->add_option("--amax", o.amax, "HEO energy ceiling a_max")->check(CLI::PositiveNumber);
        sub->add_option("--escape-spread", o.escape_spread, "HEO escape spread R in (0, 1]");
        sub->add_flag("--skip-symmetric", o.skip_symmetric,
                      "HEO random skip draws offsets over the whole range");
    };

    auto* list = app.add_subcommand("list", "Print algorithms and problems");

    auto* bench = app.add_subcommand("bench", "Run benchmark functions");
    bench->add_option("--functions", o.functions, "Comma-separated function names")
        ->delimiter(',');
    bench->add_option("--dim", o.dim, "Dimension");
    bench->add_option("--history-out", o.history_out, "Long-form convergence CSV");
    bench->add_option("--jobs", o.jobs, "Concurrent runs")->check(CLI::PositiveNumber);
    add_run_flags(bench);

    auto* engineer = app.add_subcommand("engineer", "Solve the constrained design problems");
    engineer->add_option("--problem", o.problems, "pressure_vessel, tubular_column, ...")
        ->delimiter(',');
    add_run_flags(engineer);

    auto* tune = app.add_subcommand("tune", "Tune logistic regression on a CSV dataset");
    tune->add_option("--data", o.data, "CSV: header, numeric features, class label last");
    tune->add_option("--test-fraction", o.test_fraction, "Held-out test share");
    tune->add_option("--grid", o.grid, "Grid points per axis for the grid tuner");
    add_run_flags(tune);

    auto* rank = app.add_subcommand("rank", "Dense-rank aggregation of a result table");
    rank->add_option("--input", o.input, "Exported table, or 'table3_fixture'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config;
    }

    // Defaults that differ per subcommand when the flag was not given.
    if (*engineer && engineer->count("--cmax") == 0) {
        o.cmax = 1;
    }
    if (*tune) {
        if (tune->count("--pop") == 0) {
            o.pop = 50;
        }
        if (tune->count("--iters") == 0) {
            o.iters = 50;
        }
    }

    try {
        if (*list) {
            return cmd_list(out);
        }
        if (*bench) {
            return cmd_bench(o, out);
        }
        if (*engineer) {
            return cmd_engineer(o, out);
        }
        if (*tune) {
            return cmd_tune(o, out);
        }
        return cmd_rank(o, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const modelopt::DataError& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace heokit::cli
