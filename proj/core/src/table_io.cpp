#include "heokit/harness.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace heokit::harness {

namespace {

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& s, std::size_t line) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw std::runtime_error("result CSV line " + std::to_string(line) + ": bad number '" + s +
                                 "'");
    }
    return v;
}

nlohmann::ordered_json json_number(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return nullptr;
}

double from_json_number(const nlohmann::ordered_json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

std::size_t index_of(std::vector<std::string>& names, const std::string& name) {
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (names[k] == name) {
            return k;
        }
    }
    names.push_back(name);
    return names.size() - 1;
}

struct FlatCell {
    std::size_t row;
    std::size_t column;
    Cell cell;
};

ResultTable assemble(std::vector<std::string> rows, std::vector<std::string> columns,
                     std::vector<FlatCell> cells) {
    ResultTable table(std::move(rows), std::move(columns));
    for (FlatCell& fc : cells) {
        table.at(fc.row, fc.column) = std::move(fc.cell);
    }
    return table;
}

template <class Stream>
void open_or_throw(Stream& stream, const std::filesystem::path& path) {
    if (!stream) {
        throw std::runtime_error("cannot open " + path.string());
    }
}

}  // namespace

void write_csv(const ResultTable& table, std::ostream& out) {
    out << "problem,algorithm,mean,std,time_s\n";
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
        for (std::size_t j = 0; j < table.columns().size(); ++j) {
            const Cell& c = table.at(i, j);
            out << table.rows()[i] << ',' << table.columns()[j] << ',' << number(c.mean_cost) << ','
                << number(c.std_cost) << ',' << number(c.time_per_1000_iterations()) << '\n';
        }
    }
}

nlohmann::ordered_json to_json(const ResultTable& table) {
    nlohmann::ordered_json root = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (std::size_t j = 0; j < table.columns().size(); ++j) {
            const Cell& c = table.at(i, j);
            nlohmann::ordered_json costs = nlohmann::ordered_json::array();
            for (double v : c.costs) {
                costs.push_back(json_number(v));
            }
            row[table.columns()[j]] = {
                {"mean", json_number(c.mean_cost)},
                {"std", json_number(c.std_cost)},
                {"time_s", json_number(c.time_per_1000_iterations())},
                {"iterations", c.iterations},
                {"costs", std::move(costs)},
            };
        }
        root[table.rows()[i]] = std::move(row);
    }
    return root;
}

void write_json(const ResultTable& table, std::ostream& out) {
    out << to_json(table).dump(2) << '\n';
}

void write_history_csv(const ResultTable& table, std::ostream& out) {
    out << "problem,algorithm,run,iteration,best_cost\n";
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
        for (std::size_t j = 0; j < table.columns().size(); ++j) {
            const Cell& c = table.at(i, j);
            for (std::size_t r = 0; r < c.histories.size(); ++r) {
                for (std::size_t t = 0; t < c.histories[r].size(); ++t) {
                    out << table.rows()[i] << ',' << table.columns()[j] << ',' << r << ','
                        << t + 1 << ',' << number(c.histories[r][t]) << '\n';
                }
            }
        }
    }
}

ResultTable read_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw std::runtime_error("result CSV is empty");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != "problem,algorithm,mean,std,time_s") {
        throw std::runtime_error("result CSV header must be problem,algorithm,mean,std,time_s");
    }
    std::vector<std::string> rows;
    std::vector<std::string> columns;
    std::vector<FlatCell> cells;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 5) {
            throw std::runtime_error("result CSV line " + std::to_string(line_no) +
                                     ": expected 5 fields");
        }
        Cell cell;
        cell.mean_cost = parse_number(fields[2], line_no);
        cell.std_cost = parse_number(fields[3], line_no);
        cell.mean_time_seconds = parse_number(fields[4], line_no);
        cell.iterations = 1000;
        cells.push_back({index_of(rows, fields[0]), index_of(columns, fields[1]), std::move(cell)});
    }
    if (cells.size() != rows.size() * columns.size()) {
        throw std::runtime_error("result CSV does not cover every problem/algorithm pair");
    }
    return assemble(std::move(rows), std::move(columns), std::move(cells));
}

ResultTable read_json(std::istream& in) {
    const auto root = nlohmann::ordered_json::parse(in);
    if (!root.is_object()) {
        throw std::runtime_error("result JSON must be an object of problems");
    }
    std::vector<std::string> rows;
    std::vector<std::string> columns;
    std::vector<FlatCell> cells;
    for (const auto& [problem, algs] : root.items()) {
        const std::size_t i = index_of(rows, problem);
        for (const auto& [alg, j_cell] : algs.items()) {
            Cell cell;
            cell.mean_cost = from_json_number(j_cell.at("mean"));
            cell.std_cost = from_json_number(j_cell.at("std"));
            cell.iterations = j_cell.value("iterations", std::size_t{1000});
            const double per_1000 = from_json_number(j_cell.at("time_s"));
            cell.mean_time_seconds = per_1000 * static_cast<double>(cell.iterations) / 1000.0;
            if (j_cell.contains("costs")) {
                for (const auto& v : j_cell.at("costs")) {
                    cell.costs.push_back(from_json_number(v));
                }
            }
            cells.push_back({i, index_of(columns, alg), std::move(cell)});
        }
    }
    if (cells.size() != rows.size() * columns.size()) {
        throw std::runtime_error("result JSON does not cover every problem/algorithm pair");
    }
    return assemble(std::move(rows), std::move(columns), std::move(cells));
}

void export_table(const ResultTable& table, Format format, const std::filesystem::path& path) {
    std::ofstream out(path);
    open_or_throw(out, path);
    if (format == Format::json) {
        write_json(table, out);
    } else {
        write_csv(table, out);
    }
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

void export_history(const ResultTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    open_or_throw(out, path);
    write_history_csv(table, out);
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

ResultTable import_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    open_or_throw(in, path);
    if (path.extension() == ".json") {
        return read_json(in);
    }
    return read_csv(in);
}

}  // namespace heokit::harness
