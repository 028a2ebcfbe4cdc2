#include "purebirth/occupancy.hpp"

#include <cmath>

namespace purebirth::occupancy {

OccupancyModel occupancy_model(int n) {
    return OccupancyModel{n, occupancy_process<Rational>(n)};
}

EigenSystem eigen_system(int n) {
    if (n < 1) throw std::invalid_argument("eigen_system: population must be >= 1");
    EigenSystem es;
    es.n = n;
    const int dim = n + 1;
    es.eigenvalues.reserve(static_cast<std::size_t>(dim));
    for (int j = 0; j <= n; ++j) es.eigenvalues.emplace_back(j, n);
    es.u = Matrix<mpz_class>(dim, dim);
    es.u_inv = Matrix<mpz_class>(dim, dim);
    es.sigma = Matrix<mpz_class>(dim, dim);
    es.sigma_inv = Matrix<mpz_class>(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            mpz_class b = binomial(n - i, n - j);
            es.u.at(i, j) = b;
            es.u_inv.at(i, j) = ((j - i) % 2 == 0) ? b : mpz_class(-b);
            es.sigma.at(i, j) = 1;
        }
        es.sigma_inv.at(i, i) = 1;
        if (i + 1 < dim) es.sigma_inv.at(i, i + 1) = -1;
    }
    return es;
}

Matrix<Rational> reconstruct_power(const EigenSystem& es, unsigned long t) {
    const int dim = es.n + 1;
    Matrix<Rational> out(dim, dim);
    std::vector<Rational> lt;
    lt.reserve(static_cast<std::size_t>(dim));
    for (const Rational& lambda : es.eigenvalues) lt.push_back(lambda.pow(t));
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            Rational acc(0);
            for (int m = i; m <= j; ++m) {
                acc += Rational(mpz_class(es.u.at(i, m) * es.u_inv.at(m, j))) * lt[static_cast<std::size_t>(m)];
            }
            out.at(i, j) = acc;
        }
    }
    return out;
}

Rational pmf_exact(int n, int k, long t) {
    if (n < 1) throw std::invalid_argument("pmf: population must be >= 1");
    if (t < 0) throw std::invalid_argument("pmf: negative time");
    if (k < 0 || k > n || k > t) return Rational(0);
    return Rational(falling_factorial(n, k) * stirling2(t, k), mpz_pow(mpz_class(n), static_cast<unsigned long>(t)));
}

Rational pmf_alternating_exact(int n, int k, long t) {
    if (n < 1) throw std::invalid_argument("pmf: population must be >= 1");
    if (t < 0) throw std::invalid_argument("pmf: negative time");
    if (k < 0 || k > n || k > t) return Rational(0);
    mpz_class acc = 0;
    for (int j = 0; j <= k; ++j) {
        mpz_class term = binomial(k, j) * mpz_pow(mpz_class(j), static_cast<unsigned long>(t));
        if (j == 0 && t == 0) term = binomial(k, 0);  // 0^0 = 1
        acc += ((k - j) % 2 == 0) ? term : -term;
    }
    return Rational(binomial(n, k) * acc, mpz_pow(mpz_class(n), static_cast<unsigned long>(t)));
}

double pmf_float(int n, int k, long t) {
    if (n < 1) throw std::invalid_argument("pmf: population must be >= 1");
    if (t < 0) throw std::invalid_argument("pmf: negative time");
    if (k < 0 || k > n || k > t) return 0.0;
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) {
        double term = binomial(k, j).get_d() * std::pow(static_cast<double>(j) / n, static_cast<double>(t));
        if (j == 0 && t == 0) term = 1.0;
        acc += ((k - j) % 2 == 0) ? term : -term;
    }
    return binomial(n, k).get_d() * acc;
}

Rational pmf_conditioned_exact(int n, int r, int k, long t) {
    if (n < 1) throw std::invalid_argument("pmf_conditioned: population must be >= 1");
    if (r < 0 || r > n) throw std::invalid_argument("pmf_conditioned: initial state out of range");
    if (t < 0) throw std::invalid_argument("pmf_conditioned: negative time");
    if (k < r || k > n) return Rational(0);
    // (n-r)_{k-r} {t+r \brace r,k} / n^t; the bracket vanishes for k > t+r.
    mpz_class num = falling_factorial(n - r, k - r) * r_stirling2(t + r, r, k);
    return Rational(num, mpz_pow(mpz_class(n), static_cast<unsigned long>(t)));
}

Rational pmf_conditioned_alternating_exact(int n, int r, int k, long t) {
    if (n < 1) throw std::invalid_argument("pmf_conditioned: population must be >= 1");
    if (r < 0 || r > n) throw std::invalid_argument("pmf_conditioned: initial state out of range");
    if (t < 0) throw std::invalid_argument("pmf_conditioned: negative time");
    if (k < r || k > n) return Rational(0);
    mpz_class acc = 0;
    for (int j = 0; j <= k - r; ++j) {
        mpz_class term = binomial(k - r, j) * mpz_pow(mpz_class(j + r), static_cast<unsigned long>(t));
        if (j + r == 0 && t == 0) term = binomial(k - r, j);
        acc += ((k - r - j) % 2 == 0) ? term : -term;
    }
    return Rational(binomial(n - r, n - k) * acc, mpz_pow(mpz_class(n), static_cast<unsigned long>(t)));
}

double pmf_conditioned_float(int n, int r, int k, long t) {
    if (n < 1) throw std::invalid_argument("pmf_conditioned: population must be >= 1");
    if (r < 0 || r > n) throw std::invalid_argument("pmf_conditioned: initial state out of range");
    if (t < 0) throw std::invalid_argument("pmf_conditioned: negative time");
    if (k < r || k > n) return 0.0;
    double acc = 0.0;
    for (int j = 0; j <= k - r; ++j) {
        double term = binomial(k - r, j).get_d() * std::pow(static_cast<double>(j + r) / n, static_cast<double>(t));
        if (j + r == 0 && t == 0) term = binomial(k - r, j).get_d();
        acc += ((k - r - j) % 2 == 0) ? term : -term;
    }
    return binomial(n - r, n - k).get_d() * acc;
}

Rational cdf_conditioned_exact(int n, int r, int k, long t) {
    if (n < 1) throw std::invalid_argument("cdf_conditioned: population must be >= 1");
    if (r < 0 || r > n) throw std::invalid_argument("cdf_conditioned: initial state out of range");
    if (t < 0) throw std::invalid_argument("cdf_conditioned: negative time");
    if (k < r) return Rational(0);
    if (k >= n) return Rational(1);
    Rational acc(0);
    for (int j = 0; j <= k - r; ++j) {
        mpz_class num = binomial(k - r, j) * mpz_pow(mpz_class(r + j), static_cast<unsigned long>(t));
        if (r + j == 0 && t == 0) num = binomial(k - r, j);
        Rational term(num, mpz_class(n - r - j));
        acc += ((k - r - j) % 2 == 0) ? term : -term;
    }
    return Rational(mpz_class((n - k)) * binomial(n - r, n - k), mpz_pow(mpz_class(n), static_cast<unsigned long>(t))) * acc;
}

Rational cdf_conditioned_finite_difference_exact(int n, int r, int k, long t) {
    if (n < 1) throw std::invalid_argument("cdf_conditioned: population must be >= 1");
    if (r < 0 || r > n) throw std::invalid_argument("cdf_conditioned: initial state out of range");
    if (t < 0) throw std::invalid_argument("cdf_conditioned: negative time");
    if (k < r) return Rational(0);
    if (k >= n) return Rational(1);
    auto f = [&](const Rational& x) {
        Rational num = (t == 0 && x.is_zero()) ? Rational(1) : x.pow(static_cast<unsigned long>(t));
        return num / (Rational(n) - x);
    };
    Rational diff = finite_difference<Rational>(f, k - r, Rational(r));
    Rational scale(falling_factorial(n - r, k - r + 1),
                   mpz_pow(mpz_class(n), static_cast<unsigned long>(t)) * falling_factorial(k - r, k - r));
    return scale * diff;
}

double cdf_conditioned_float(int n, int r, int k, long t) {
    if (n < 1) throw std::invalid_argument("cdf_conditioned: population must be >= 1");
    if (r < 0 || r > n) throw std::invalid_argument("cdf_conditioned: initial state out of range");
    if (t < 0) throw std::invalid_argument("cdf_conditioned: negative time");
    if (k < r) return 0.0;
    if (k >= n) return 1.0;
    double acc = 0.0;
    for (int j = 0; j <= k - r; ++j) {
        double pw = std::pow(static_cast<double>(r + j) / n, static_cast<double>(t));
        if (r + j == 0 && t == 0) pw = 1.0;
        double term = binomial(k - r, j).get_d() * pw / static_cast<double>(n - r - j);
        acc += ((k - r - j) % 2 == 0) ? term : -term;
    }
    return static_cast<double>(n - k) * binomial(n - r, n - k).get_d() * acc;
}

Matrix<mpz_class> c_eigenvector_matrix(int n) {
    if (n < 1) throw std::invalid_argument("c_eigenvector_matrix: population must be >= 1");
    Matrix<mpz_class> v(n, n);
    v.at(0, 0) = 1;
    for (int j = 1; j < n; ++j) v.at(0, j) = -binomial(n - 1, j - 1);
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) v.at(i, j) = binomial(n - 1 - i, n - 1 - j);
    return v;
}

Matrix<mpz_class> c_eigenvector_matrix_inverse(int n) {
    if (n < 1) throw std::invalid_argument("c_eigenvector_matrix_inverse: population must be >= 1");
    Matrix<mpz_class> v(n, n);
    for (int j = 0; j < n; ++j) v.at(0, j) = 1;
    for (int i = 1; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            mpz_class b = binomial(n - 1 - i, n - 1 - j);
            v.at(i, j) = ((j - i) % 2 == 0) ? b : mpz_class(-b);
        }
    }
    return v;
}

std::pair<Rational, Rational> mean_variance_exact(int n, long t) {
    if (n < 1) throw std::invalid_argument("mean_variance: population must be >= 1");
    if (t < 0) throw std::invalid_argument("mean_variance: negative time");
    const unsigned long ut = static_cast<unsigned long>(t);
    Rational a = Rational(n - 1, n).pow(ut);          // (1 - 1/n)^t
    Rational b = Rational(n - 2, n).pow(ut);          // (1 - 2/n)^t
    Rational mean = Rational(n) - Rational(n) * a;
    Rational variance = Rational(n) * a + Rational(static_cast<long>(n) * (n - 1)) * b - Rational(n) * Rational(n) * a * a;
    return {mean, variance};
}

std::pair<double, double> mean_variance_float(int n, long t) {
    if (n < 1) throw std::invalid_argument("mean_variance: population must be >= 1");
    if (t < 0) throw std::invalid_argument("mean_variance: negative time");
    double a = std::pow(1.0 - 1.0 / n, static_cast<double>(t));
    double b = std::pow(1.0 - 2.0 / n, static_cast<double>(t));
    double nn = static_cast<double>(n);
    return {nn - nn * a, nn * a + nn * (nn - 1.0) * b - nn * nn * a * a};
}

LimitReport limit_distribution_report(int n, long t) {
    LimitReport rep{Rational(0), Rational(0)};
    for (int k = 0; k < n; ++k) {
        Rational m = pmf_exact(n, k, t);
        if (m > rep.max_transient_pmf) rep.max_transient_pmf = m;
        rep.transient_mass += m;
    }
    return rep;
}

bool rowsum_identity_check(int n, int r, long t) {
    if (n < 1 || r < 0 || r > n || t < 0) throw std::invalid_argument("rowsum_identity_check: bad arguments");
    mpz_class lhs = 0;
    for (int j = r; j <= n; ++j) {
        lhs += falling_factorial(n, j) * r_stirling2(t + r, r, j);
    }
    mpz_class rhs = falling_factorial(n, r) * mpz_pow(mpz_class(n), static_cast<unsigned long>(t));
    return lhs == rhs;
}

bool smaller_population_identity_check(int n, int k, long t) {
    if (n < 2 || k < 1 || k > n - 1 || t <= 0) throw std::invalid_argument("smaller_population_identity_check: bad arguments");
    Rational lhs = cdf_conditioned_exact(n, 0, k, t);
    Rational sum(0);
    for (int j = 0; j <= k; ++j) {
        sum += pmf_conditioned_exact(n - 1, j, k, t);
    }
    Rational rhs = Rational(n - 1, n).pow(static_cast<unsigned long>(t)) * sum;
    return lhs == rhs;
}

}  // namespace purebirth::occupancy
