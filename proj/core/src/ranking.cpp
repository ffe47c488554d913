#include "heokit/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace heokit::harness {

std::vector<int> dense_ranks(std::span<const double> costs) {
    std::vector<double> distinct(costs.begin(), costs.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> ranks;
    ranks.reserve(costs.size());
    for (double c : costs) {
        const auto pos = std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin();
        ranks.push_back(static_cast<int>(pos) + 1);
    }
    return ranks;
}

double RankSummary::average(std::size_t column) const {
    return static_cast<double>(rank_sums.at(column)) / static_cast<double>(row_count);
}

std::string RankSummary::formatted(std::size_t column) const {
    // Truncation done on integers so 16/7 prints 2.2857 and not a rounded
    // neighbour.
    const long scaled = rank_sums.at(column) * 10000L / static_cast<long>(row_count);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%ld.%04ld", scaled / 10000L, scaled % 10000L);
    return buf;
}

RankSummary dense_rank_aggregate(const ResultTable& table, std::span<const std::string> rows) {
    if (rows.empty()) {
        throw std::invalid_argument("rank aggregation needs at least one row");
    }
    RankSummary summary;
    summary.algorithms = table.columns();
    summary.rank_sums.assign(table.columns().size(), 0);
    summary.row_count = rows.size();
    std::vector<double> costs(table.columns().size());
    for (const std::string& row : rows) {
        std::size_t i = 0;
        try {
            i = table.row_index(row);
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("rank aggregation: unknown row '" + row + "'");
        }
        for (std::size_t j = 0; j < costs.size(); ++j) {
            costs[j] = table.at(i, j).mean_cost;
        }
        const std::vector<int> ranks = dense_ranks(costs);
        for (std::size_t j = 0; j < ranks.size(); ++j) {
            summary.rank_sums[j] += ranks[j];
        }
    }
    return summary;
}

RankSummary dense_rank_aggregate(const ResultTable& table) {
    return dense_rank_aggregate(table, table.rows());
}

}  // namespace heokit::harness
