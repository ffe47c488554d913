#include "heokit/modelopt.hpp"
#include "heokit/random.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string_view>

namespace heokit::modelopt {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    s = s.substr(b, s.find_last_not_of(ws) - b + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

bool parse_number(std::string_view s, double& value) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(value);
}

}  // namespace

std::array<std::size_t, 2> Dataset::class_counts() const {
    std::array<std::size_t, 2> counts{0, 0};
    for (int y : labels) {
        ++counts[y == 1 ? 1 : 0];
    }
    return counts;
}

Dataset parse_csv(std::istream& in, const std::string& source) {
    Dataset data;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t class_count = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (!have_header) {
            if (fields.size() < 2) {
                throw DataError(source + ":" + std::to_string(line_no) +
                                ": header needs at least one feature column and a label column");
            }
            for (std::size_t k = 0; k + 1 < fields.size(); ++k) {
                data.feature_names.emplace_back(fields[k]);
            }
            have_header = true;
            continue;
        }
        if (fields.size() != data.feature_names.size() + 1) {
            throw DataError(source + ":" + std::to_string(line_no) + ": expected " +
                            std::to_string(data.feature_names.size() + 1) + " fields, got " +
                            std::to_string(fields.size()));
        }
        Vector row(data.feature_names.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!parse_number(fields[k], row[k])) {
                throw DataError(source + ":" + std::to_string(line_no) + ": column '" +
                                data.feature_names[k] + "' is not a finite number: '" +
                                std::string(fields[k]) + "'");
            }
        }
        const std::string_view label = fields.back();
        if (label.empty()) {
            throw DataError(source + ":" + std::to_string(line_no) + ": empty class label");
        }
        int y = -1;
        for (std::size_t c = 0; c < class_count; ++c) {
            if (data.class_names[c] == label) {
                y = static_cast<int>(c);
            }
        }
        if (y < 0) {
            if (class_count == 2) {
                throw DataError(source + ":" + std::to_string(line_no) + ": third class '" +
                                std::string(label) + "'; only binary labels are supported");
            }
            data.class_names[class_count] = std::string(label);
            y = static_cast<int>(class_count++);
        }
        data.features.push_back(std::move(row));
        data.labels.push_back(y);
    }

    if (!have_header) {
        throw DataError(source + ": empty file");
    }
    if (class_count < 2) {
        throw DataError(source + ": need two classes, found " + std::to_string(class_count));
    }
    return data;
}

Dataset load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    return parse_csv(in, path.string());
}

Dataset subset(const Dataset& data, std::span<const std::size_t> indices) {
    Dataset out;
    out.feature_names = data.feature_names;
    out.class_names = data.class_names;
    out.features.reserve(indices.size());
    out.labels.reserve(indices.size());
    for (std::size_t i : indices) {
        out.features.push_back(data.features.at(i));
        out.labels.push_back(data.labels.at(i));
    }
    return out;
}

std::pair<Dataset, Dataset> train_test_split(const Dataset& data, double test_fraction,
                                             std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw std::invalid_argument("test fraction must lie in (0, 1)");
    }
    const std::size_t m = data.rows();
    // ceil(m * f), ignoring rounding noise such as 100 * 0.07 = 7.000000000000001
    const double exact = static_cast<double>(m) * test_fraction;
    const double nearest = std::round(exact);
    const auto n_test = static_cast<std::size_t>(
        std::abs(exact - nearest) < 1e-9 ? nearest : std::ceil(exact));
    if (n_test == 0 || n_test >= m) {
        throw std::invalid_argument("split of " + std::to_string(m) + " rows at fraction " +
                                    std::to_string(test_fraction) + " leaves an empty part");
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    RandomStream rng(seed);
    for (std::size_t i = m - 1; i > 0; --i) {
        std::swap(order[i], order[rng.below(i + 1)]);
    }
    const std::span<const std::size_t> all(order);
    Dataset test = subset(data, all.first(n_test));
    Dataset train = subset(data, all.subspan(n_test));
    return {std::move(train), std::move(test)};
}

Dataset make_blobs(std::size_t m, std::size_t d, double separation, std::uint64_t seed) {
    if (m < 2 || d < 1) {
        throw std::invalid_argument("make_blobs needs m >= 2 and d >= 1");
    }
    RandomStream rng(seed);
    Dataset data;
    data.class_names = {"negative", "positive"};
    for (std::size_t k = 0; k < d; ++k) {
        data.feature_names.push_back("x" + std::to_string(k + 1));
    }
    for (std::size_t i = 0; i < m; ++i) {
        const int y = static_cast<int>(i % 2);
        const double centre = y == 1 ? separation : -separation;
        Vector row(d);
        for (double& v : row) {
            v = rng.normal(centre, 1.0);
        }
        data.features.push_back(std::move(row));
        data.labels.push_back(y);
    }
    return data;
}

}  // namespace heokit::modelopt
