#include "heokit/harness.hpp"

#include <array>

namespace heokit::harness {

ResultTable table3_fixture() {
    static constexpr std::array<std::array<double, 6>, 14> kCosts{{
        {3.545e+02, 7.847e-01, 1.651e-91, 0.000e+00, 8.814e-07, 1.465e-19},
        {7.943e+00, 7.992e-01, 1.416e-01, 1.344e-03, 1.742e-07, 1.880e-19},
        {1.420e+01, 4.495e-01, 6.178e-24, 1.302e-176, 5.579e+00, 2.303e+00},
        {8.246e+02, 3.912e+00, 1.622e-51, 2.498e-134, 4.592e-03, 3.713e-14},
        {3.168e+03, 2.235e+00, 4.271e+00, 3.112e-01, 3.817e-03, 1.603e-09},
        {1.022e+09, 8.106e+05, 1.893e-85, 0.000e+00, 1.077e+00, 6.314e-14},
        {2.470e+03, 3.790e+02, 2.168e-89, 3.531e-259, 4.843e-04, 4.084e-17},
        {3.381e+01, 7.514e-01, 2.441e-46, 1.299e-76, 3.697e-04, 4.062e-02},
        {0.247727, 0.053917, 0.006319, 0.010466, 0.064001, 0.013684},
        {715.590208, 137.192018, 0.000000, 0.000000, 67.088411, 27.315077},
        {2.000e+01, 1.811e+00, 1.480e-16, 4.440e-16, 2.665e+00, 2.088e+01},
        {2439.240184, 0.544817, 1.314077, 1.421046, 245.547882, 2.834483},
        {4.046e+00, 2.954e-01, 5.659e-02, 9.341e-99, 3.357e+00, 3.932e-01},
        {0.002472, 0.050465, 0.000076, 0.000000, 0.001709, 0.186564},
    }};

    std::vector<std::string> rows;
    for (std::size_t i = 0; i < kCosts.size(); ++i) {
        rows.push_back("F" + std::to_string(i + 1));
    }
    ResultTable table(std::move(rows), {"PSO", "AFSA", "GWO", "HEO", "GA", "QPSO"});
    for (std::size_t i = 0; i < kCosts.size(); ++i) {
        for (std::size_t j = 0; j < kCosts[i].size(); ++j) {
            Cell& cell = table.at(i, j);
            cell.costs = {kCosts[i][j]};
            cell.mean_cost = kCosts[i][j];
            cell.iterations = 1000;
        }
    }
    return table;
}

}  // namespace heokit::harness
