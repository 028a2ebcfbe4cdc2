#include "purebirth/randomized.hpp"

namespace purebirth::randomized {

RandomizedOccupancyModel randomized_model(int n, const Rational& p) {
    return RandomizedOccupancyModel{n, p, randomized_process<Rational>(n, p)};
}

occupancy::EigenSystem eigen_system(int n, const Rational& p) {
    if (!(Rational(0) < p) || Rational(1) < p)
        throw std::domain_error("randomized eigen_system: retention probability must satisfy 0 < p <= 1");
    occupancy::EigenSystem es = occupancy::eigen_system(n);
    for (int j = 0; j <= n; ++j) {
        es.eigenvalues[static_cast<std::size_t>(j)] = stop_probability(n, p, j);
    }
    return es;
}

}  // namespace purebirth::randomized
