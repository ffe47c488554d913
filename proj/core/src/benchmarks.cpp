#include "heokit/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

// Formulas follow the published tables term for term; sums accumulate left
// to right so golden values stay stable.

namespace heokit::bench {

namespace {

constexpr double pi = std::numbers::pi;

double sphere(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) {
        sum += v * v;
    }
    return sum;
}

double step(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) {
        sum += (v + 0.5) * (v + 0.5);
    }
    return sum;
}

double schwefel221(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double schwefel222(std::span<const double> x) {
    double sum = 0.0;
    double prod = 1.0;
    for (double v : x) {
        sum += std::abs(v);
        prod *= std::abs(v);
    }
    return sum + prod;
}

// Printed without the usual factor 100 on the first term.
double rosenbrock(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        sum += a * a + b * b;
    }
    return sum;
}

double bent_cigar(std::span<const double> x) {
    double tail = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        tail += x[i] * x[i];
    }
    return x[0] * x[0] + 1e6 * tail;
}

double sum_squares2(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += static_cast<double>(i + 1) * x[i] * x[i];
    }
    return sum;
}

double alpine(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) {
        sum += std::abs(v * std::sin(v) + 0.1 * v);
    }
    return sum;
}

double griewank(std::span<const double> x) {
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 - prod + 1.0;
}

double rastrigin(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) {
        sum += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
    }
    return sum;
}

double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * pi * v);
    }
    return 20.0 + std::numbers::e - 20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n);
}

double levy(std::span<const double> x) {
    const std::size_t n = x.size();
    auto w = [&](std::size_t i) { return 1.0 + (x[i] - 1.0) / 4.0; };
    const double s1 = std::sin(pi * w(0));
    double sum = s1 * s1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double wi = w(i);
        const double s = std::sin(pi * wi + 1.0);
        sum += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * s * s);
    }
    const double wn = w(n - 1);
    const double sn = std::sin(2.0 * pi * wn);
    return sum + (wn - 1.0) * (wn - 1.0) * (1.0 + sn * sn);
}

double salomon(std::span<const double> x) {
    const double r = std::sqrt(sphere(x));
    return 1.0 - std::cos(2.0 * pi * r) + 0.1 * r;
}

double schaffer(std::span<const double> x) {
    const std::size_t n = x.size();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double s = std::sin(std::sqrt(x[i] * x[i] + x[i + 1] * x[i + 1]));
        sum += s * s - 0.5;
    }
    return 0.5 + sum / static_cast<double>(n - 1);
}

using Modality::multimodal;
using Modality::unimodal;

const std::array<BenchmarkInfo, benchmark_count> kRegistry{{
    {BenchmarkId::sphere, "sphere", "F1", "Sphere", unimodal, MinimizerKind::origin},
    {BenchmarkId::step, "step", "F2", "Step", unimodal, MinimizerKind::minus_half},
    {BenchmarkId::schwefel221, "schwefel221", "F3", "Schwefel 2.21", unimodal, MinimizerKind::origin},
    {BenchmarkId::schwefel222, "schwefel222", "F4", "Schwefel 2.22", unimodal, MinimizerKind::origin},
    {BenchmarkId::rosenbrock, "rosenbrock", "F5", "Rosenbrock", unimodal, MinimizerKind::ones,
     0.0, -100.0, 100.0, 2},
    {BenchmarkId::bent_cigar, "bentcigar", "F6", "Bent Cigar", unimodal, MinimizerKind::origin},
    {BenchmarkId::sum_squares2, "sumsquares2", "F7", "Sum Squares 2", unimodal, MinimizerKind::origin},
    {BenchmarkId::alpine, "alpine", "F8", "Alpine", multimodal, MinimizerKind::origin},
    {BenchmarkId::griewank, "griewank", "F9", "Griewank", multimodal, MinimizerKind::origin},
    {BenchmarkId::rastrigin, "rastrigin", "F10", "Rastrigin", multimodal, MinimizerKind::origin},
    {BenchmarkId::ackley, "ackley", "F11", "Ackley", multimodal, MinimizerKind::origin},
    {BenchmarkId::levy, "levy", "F12", "Levy", multimodal, MinimizerKind::ones},
    {BenchmarkId::salomon, "salomon", "F13", "Salomon", multimodal, MinimizerKind::origin},
    {BenchmarkId::schaffer, "schaffer", "F14", "Schaffer", multimodal, MinimizerKind::origin,
     0.0, -100.0, 100.0, 2},
}};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char l, char r) {
               return std::tolower(static_cast<unsigned char>(l)) ==
                      std::tolower(static_cast<unsigned char>(r));
           });
}

}  // namespace

SearchSpace BenchmarkInfo::default_space(std::size_t dim) const {
    return SearchSpace::cube(dim, lower, upper);
}

Vector BenchmarkInfo::minimizer_point(std::size_t dim) const {
    switch (minimizer) {
        case MinimizerKind::minus_half:
            return Vector(dim, -0.5);
        case MinimizerKind::ones:
            return Vector(dim, 1.0);
        case MinimizerKind::origin:
            break;
    }
    return Vector(dim, 0.0);
}

const std::array<BenchmarkInfo, benchmark_count>& registry() { return kRegistry; }

const BenchmarkInfo& info(BenchmarkId id) { return kRegistry[static_cast<std::size_t>(id)]; }

std::optional<BenchmarkId> find(std::string_view name) {
    for (const auto& entry : kRegistry) {
        if (entry.name == name || iequals(entry.label, name)) {
            return entry.id;
        }
    }
    return std::nullopt;
}

double evaluate(BenchmarkId id, std::span<const double> x) {
    const BenchmarkInfo& meta = info(id);
    if (x.size() < meta.min_dim) {
        throw std::invalid_argument(std::string(meta.name) + " needs at least " +
                                    std::to_string(meta.min_dim) + " dimensions, got " +
                                    std::to_string(x.size()));
    }
    switch (id) {
        case BenchmarkId::sphere: return sphere(x);
        case BenchmarkId::step: return step(x);
        case BenchmarkId::schwefel221: return schwefel221(x);
        case BenchmarkId::schwefel222: return schwefel222(x);
        case BenchmarkId::rosenbrock: return rosenbrock(x);
        case BenchmarkId::bent_cigar: return bent_cigar(x);
        case BenchmarkId::sum_squares2: return sum_squares2(x);
        case BenchmarkId::alpine: return alpine(x);
        case BenchmarkId::griewank: return griewank(x);
        case BenchmarkId::rastrigin: return rastrigin(x);
        case BenchmarkId::ackley: return ackley(x);
        case BenchmarkId::levy: return levy(x);
        case BenchmarkId::salomon: return salomon(x);
        case BenchmarkId::schaffer: return schaffer(x);
    }
    throw std::invalid_argument("unknown benchmark id");
}

Objective make_objective(BenchmarkId id, std::size_t dim) {
    const BenchmarkInfo& meta = info(id);
    if (dim < meta.min_dim) {
        throw std::invalid_argument(std::string(meta.name) + " needs at least " +
                                    std::to_string(meta.min_dim) + " dimensions");
    }
    return Objective(std::string(meta.name), meta.default_space(dim),
                     [id](std::span<const double> x) { return evaluate(id, x); });
}

}  // namespace heokit::bench
