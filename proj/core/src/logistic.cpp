#include "heokit/modelopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace heokit::modelopt {

namespace {

double dot_with_bias(std::span<const double> w, std::span<const double> row) {
    double z = w[0];
    for (std::size_t j = 0; j < row.size(); ++j) {
        z += w[j + 1] * row[j];
    }
    return z;
}

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow
double softplus(double z) {
    return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

void check_shapes(std::span<const double> weights, std::span<const Vector> x,
                  std::span<const int> y, double c) {
    if (x.empty() || x.size() != y.size()) {
        throw std::invalid_argument("need matching, non-empty feature rows and labels");
    }
    if (weights.size() != x[0].size() + 1) {
        throw std::invalid_argument("weights must have one entry per feature plus a bias");
    }
    if (!(c > 0.0)) {
        throw std::invalid_argument("C must be positive");
    }
}

}  // namespace

double loss(std::span<const double> weights, std::span<const Vector> x, std::span<const int> y,
            double c) {
    check_shapes(weights, x, y, c);
    const double m = static_cast<double>(x.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double z = dot_with_bias(weights, x[i]);
        // -[y ln h + (1 - y) ln(1 - h)] = softplus(z) - y z
        sum += softplus(z) - (y[i] == 1 ? z : 0.0);
    }
    double reg = 0.0;
    for (std::size_t j = 1; j < weights.size(); ++j) {
        reg += weights[j] * weights[j];
    }
    return sum / m + reg / (2.0 * c * m);
}

Vector gradient(std::span<const double> weights, std::span<const Vector> x,
                std::span<const int> y, double c) {
    check_shapes(weights, x, y, c);
    const double m = static_cast<double>(x.size());
    Vector g(weights.size(), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = sigmoid(dot_with_bias(weights, x[i])) - static_cast<double>(y[i]);
        g[0] += r;
        for (std::size_t j = 0; j < x[i].size(); ++j) {
            g[j + 1] += r * x[i][j];
        }
    }
    for (std::size_t j = 0; j < g.size(); ++j) {
        g[j] /= m;
        if (j > 0) {
            g[j] += weights[j] / (c * m);
        }
    }
    return g;
}

double LogisticModel::predict_proba(std::span<const double> row) const {
    if (row.size() != feature_mean.size()) {
        throw std::invalid_argument("row has " + std::to_string(row.size()) +
                                    " features, model expects " +
                                    std::to_string(feature_mean.size()));
    }
    double z = weights[0];
    for (std::size_t j = 0; j < row.size(); ++j) {
        z += weights[j + 1] * (row[j] - feature_mean[j]) / feature_scale[j];
    }
    // keep h strictly inside (0, 1) even when the sigmoid saturates
    return std::clamp(sigmoid(z), std::numeric_limits<double>::denorm_min(),
                      std::nextafter(1.0, 0.0));
}

LogisticModel train(const Dataset& data, double c, int max_iter, const TrainOptions& options) {
    if (!(c > 0.0)) {
        throw std::invalid_argument("C must be positive");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("max_iter must be at least 1");
    }
    if (data.rows() == 0 || data.cols() == 0) {
        throw std::invalid_argument("cannot train on an empty dataset");
    }
    if (!(options.learning_rate > 0.0)) {
        throw std::invalid_argument("learning rate must be positive");
    }
    const std::size_t m = data.rows();
    const std::size_t d = data.cols();

    LogisticModel model;
    model.feature_mean.assign(d, 0.0);
    model.feature_scale.assign(d, 0.0);
    for (const Vector& row : data.features) {
        for (std::size_t j = 0; j < d; ++j) {
            model.feature_mean[j] += row[j];
        }
    }
    for (double& mu : model.feature_mean) {
        mu /= static_cast<double>(m);
    }
    for (const Vector& row : data.features) {
        for (std::size_t j = 0; j < d; ++j) {
            const double dev = row[j] - model.feature_mean[j];
            model.feature_scale[j] += dev * dev;
        }
    }
    for (double& s : model.feature_scale) {
        s = std::sqrt(s / static_cast<double>(m));
        if (!(s > 0.0)) {
            s = 1.0;  // constant column
        }
    }

    std::vector<Vector> z(m, Vector(d));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            z[i][j] = (data.features[i][j] - model.feature_mean[j]) / model.feature_scale[j];
        }
    }

    // Data term by an explicit step, L2 term by its exact proximal map.
    // With a tiny C the explicit form of the L2 step would overshoot.
    const double lr = options.learning_rate;
    const double shrink = 1.0 / (1.0 + lr / (c * static_cast<double>(m)));
    model.weights.assign(d + 1, 0.0);
    Vector g(d + 1);
    if (options.loss_trace) {
        options.loss_trace->push_back(loss(model.weights, z, data.labels, c));
    }
    for (int it = 0; it < max_iter; ++it) {
        std::fill(g.begin(), g.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            const double r = sigmoid(dot_with_bias(model.weights, z[i])) -
                             static_cast<double>(data.labels[i]);
            g[0] += r;
            for (std::size_t j = 0; j < d; ++j) {
                g[j + 1] += r * z[i][j];
            }
        }
        model.weights[0] -= lr * g[0] / static_cast<double>(m);
        for (std::size_t j = 1; j <= d; ++j) {
            model.weights[j] = (model.weights[j] - lr * g[j] / static_cast<double>(m)) * shrink;
        }
        if (options.loss_trace) {
            options.loss_trace->push_back(loss(model.weights, z, data.labels, c));
        }
    }
    return model;
}

ConfusionMatrix confusion(const LogisticModel& model, const Dataset& data) {
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const int predicted = model.predict(data.features[i]);
        const int actual = data.labels[i];
        if (predicted == 1) {
            ++(actual == 1 ? cm.tp : cm.fp);
        } else {
            ++(actual == 0 ? cm.tn : cm.fn);
        }
    }
    return cm;
}

Metrics metrics(const ConfusionMatrix& cm) {
    Metrics out;
    auto ratio = [&out](std::size_t num, std::size_t den) {
        if (den == 0) {
            out.undefined_ratio = true;
            return 0.0;
        }
        return static_cast<double>(num) / static_cast<double>(den);
    };
    out.accuracy = ratio(cm.tp + cm.tn, cm.total());
    out.sensitivity = ratio(cm.tp, cm.tp + cm.fn);
    out.specificity = ratio(cm.tn, cm.tn + cm.fp);
    out.precision = ratio(cm.tp, cm.tp + cm.fp);
    out.recall = out.sensitivity;
    if (out.precision + out.recall == 0.0) {
        out.undefined_ratio = true;
        out.f1 = 0.0;
    } else {
        out.f1 = 2.0 * (out.precision * out.recall) / (out.precision + out.recall);
    }
    return out;
}

Metrics metrics(const LogisticModel& model, const Dataset& test) {
    if (test.rows() == 0) {
        throw std::invalid_argument("metrics need a non-empty test set");
    }
    return metrics(confusion(model, test));
}

void to_json(nlohmann::json& j, const Metrics& m) {
    j = nlohmann::json{{"accuracy", m.accuracy},       {"sensitivity", m.sensitivity},
                       {"specificity", m.specificity}, {"precision", m.precision},
                       {"recall", m.recall},           {"f1", m.f1},
                       {"undefined_ratio", m.undefined_ratio}};
}

}  // namespace heokit::modelopt
