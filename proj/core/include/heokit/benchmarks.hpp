#pragma once

#include "heokit/objective.hpp"
#include "heokit/search_space.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace heokit::bench {

enum class BenchmarkId {
    sphere,        // F1
    step,          // F2
    schwefel221,   // F3
    schwefel222,   // F4
    rosenbrock,    // F5
    bent_cigar,    // F6
    sum_squares2,  // F7
    alpine,        // F8
    griewank,      // F9
    rastrigin,     // F10
    ackley,        // F11
    levy,          // F12
    salomon,       // F13
    schaffer,      // F14
};

enum class Modality { unimodal, multimodal };

enum class MinimizerKind { origin, minus_half, ones };

struct BenchmarkInfo {
    BenchmarkId id;
    std::string_view name;   // CLI name, e.g. "rastrigin"
    std::string_view label;  // "F10"
    std::string_view title;  // "Rastrigin"
    Modality modality;
    MinimizerKind minimizer;
    double f_min = 0.0;
    double lower = -100.0;
    double upper = 100.0;
    std::size_t min_dim = 1;

    SearchSpace default_space(std::size_t dim) const;
    Vector minimizer_point(std::size_t dim) const;
};

inline constexpr std::size_t benchmark_count = 14;

/// All functions in F1..F14 order.
const std::array<BenchmarkInfo, benchmark_count>& registry();

const BenchmarkInfo& info(BenchmarkId id);

/// Looks up by CLI name or by label ("F3").
std::optional<BenchmarkId> find(std::string_view name);

/// Throws std::invalid_argument when x is shorter than info(id).min_dim.
double evaluate(BenchmarkId id, std::span<const double> x);

/// Objective over the function's default space; throws when dim < min_dim.
Objective make_objective(BenchmarkId id, std::size_t dim);

}  // namespace heokit::bench
