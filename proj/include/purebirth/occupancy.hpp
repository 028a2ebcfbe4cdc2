// The classical occupancy chain p_k = (n-k)/n: Pascal-matrix
// eigendecomposition, explicit / r-Stirling / finite-difference forms of
// the (conditioned) PMF and CDF, moments, and the appendix identities.
#pragma once

#include "purebirth/matrix.hpp"
#include "purebirth/pbp.hpp"

namespace purebirth::occupancy {

struct OccupancyModel {
    int n;
    PureBirthProcess<Rational> process;
};

OccupancyModel occupancy_model(int n);

template <class T>
PureBirthProcess<T> occupancy_process(int n) {
    if (n < 1) throw std::invalid_argument("occupancy_process: population must be >= 1");
    std::vector<T> p;
    p.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) p.push_back(scalar_traits<T>::from_fraction(n - k, n));
    return make_process<T>(std::move(p));
}

template <>
inline PureBirthProcess<LogFloat> occupancy_process<LogFloat>(int n) {
    return convert_process<LogFloat>(occupancy_process<Rational>(n));
}

// (U, Lambda, U^-1) of the transition matrix plus the sum matrix Sigma and
// its inverse. U is the upper-triangular downward-pointing Pascal matrix
// [U]_{i,k} = C(n-i, n-k); U^-1 carries alternating signs.
struct EigenSystem {
    int n = 0;
    std::vector<Rational> eigenvalues;
    Matrix<mpz_class> u;
    Matrix<mpz_class> u_inv;
    Matrix<mpz_class> sigma;
    Matrix<mpz_class> sigma_inv;
};

EigenSystem eigen_system(int n);

// U Lambda^t U^-1, exact.
Matrix<Rational> reconstruct_power(const EigenSystem& es, unsigned long t);

// --- probability mass function ------------------------------------------

// Stirling form (n)_k S(t,k) / n^t.
Rational pmf_exact(int n, int k, long t);
// Inclusion-exclusion form C(n,k) sum_j (-1)^{k-j} C(k,j) j^t / n^t.
Rational pmf_alternating_exact(int n, int k, long t);
double pmf_float(int n, int k, long t);

template <class T>
T pmf(int n, int k, long t);
template <>
inline Rational pmf<Rational>(int n, int k, long t) { return pmf_exact(n, k, t); }
template <>
inline double pmf<double>(int n, int k, long t) { return pmf_float(n, k, t); }

// --- initial-state conditioned forms --------------------------------------

// (n-r)_{k-r} {t+r \brace r,k} / n^t; the r-Stirling route.
Rational pmf_conditioned_exact(int n, int r, int k, long t);
Rational pmf_conditioned_alternating_exact(int n, int r, int k, long t);
double pmf_conditioned_float(int n, int r, int k, long t);

template <class T>
T pmf_conditioned(int n, int r, int k, long t);
template <>
inline Rational pmf_conditioned<Rational>(int n, int r, int k, long t) { return pmf_conditioned_exact(n, r, k, t); }
template <>
inline double pmf_conditioned<double>(int n, int r, int k, long t) { return pmf_conditioned_float(n, r, k, t); }

// Explicit form with the (n-k)/n^t prefactor and (r+j)^t/(n-r-j) terms.
Rational cdf_conditioned_exact(int n, int r, int k, long t);
// Same value through (n-r)_{k-r+1}/n^t * Delta^{k-r}[x^t/(n-x)]_{x=r} / (k-r)!.
Rational cdf_conditioned_finite_difference_exact(int n, int r, int k, long t);
double cdf_conditioned_float(int n, int r, int k, long t);

template <class T>
T cdf_conditioned(int n, int r, int k, long t);
template <>
inline Rational cdf_conditioned<Rational>(int n, int r, int k, long t) { return cdf_conditioned_exact(n, r, k, t); }
template <>
inline double cdf_conditioned<double>(int n, int r, int k, long t) { return cdf_conditioned_float(n, r, k, t); }

// --- complementary-CDF matrix ---------------------------------------------

// The n x n matrix (1/n) bidiag(diag = (n,1,2,...,n-1), super = (n-1,...,1)).
// Its powers generate the complementary distribution one step ahead:
// [C^t]_{0,j} = Pr(X_{t+1} > j).
template <class T>
BidiagonalMatrix<T> ccdf_matrix_occupancy(int n) {
    if (n < 1) throw std::invalid_argument("ccdf_matrix_occupancy: population must be >= 1");
    BidiagonalMatrix<T> m;
    m.diag.reserve(static_cast<std::size_t>(n));
    m.diag.push_back(ring::one<T>());
    for (int j = 1; j < n; ++j) m.diag.push_back(scalar_traits<T>::from_fraction(j, n));
    for (int j = 1; j < n; ++j) m.super.push_back(scalar_traits<T>::from_fraction(n - j, n));
    return m;
}

// Eigenvector matrices V, V^-1 of the complementary-CDF matrix C, with
// C = V diag(1, 1/n, ..., (n-1)/n) V^-1 exactly.
Matrix<mpz_class> c_eigenvector_matrix(int n);
Matrix<mpz_class> c_eigenvector_matrix_inverse(int n);

// --- moments and identity checks ------------------------------------------

// Mean n - n(1-1/n)^t and the matching variance.
std::pair<Rational, Rational> mean_variance_exact(int n, long t);
std::pair<double, double> mean_variance_float(int n, long t);

struct LimitReport {
    Rational max_transient_pmf;
    Rational transient_mass;
};

// Max transient-state mass and total transient mass at time t.
LimitReport limit_distribution_report(int n, long t);

// sum_{j=r}^n (n)_j {t+r \brace r,j} = (n)_r n^t, exact integers.
bool rowsum_identity_check(int n, int r, long t);

// Pr(X_t <= k) over [n] vs (1-1/n)^t sum_{j<=k} Pr(X~_t = k | X~_0 = j)
// over [n-1].
bool smaller_population_identity_check(int n, int k, long t);

}  // namespace purebirth::occupancy
