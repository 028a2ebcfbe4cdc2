// Harkness's randomized occupancy model: each throw is retained with
// probability p, giving p_k = (n-k)p/n and q_k = (n-(n-k)p)/n.
#pragma once

#include "purebirth/occupancy.hpp"
#include "purebirth/pbp.hpp"

namespace purebirth::randomized {

struct RandomizedOccupancyModel {
    int n;
    Rational p;
    PureBirthProcess<Rational> process;
};

RandomizedOccupancyModel randomized_model(int n, const Rational& p);

template <class T>
PureBirthProcess<T> randomized_process(int n, const T& p) {
    if (n < 1) throw std::invalid_argument("randomized_process: population must be >= 1");
    if (!(ring::zero<T>() < p) || ring::one<T>() < p)
        throw std::domain_error("randomized_process: retention probability must satisfy 0 < p <= 1");
    std::vector<T> probs;
    probs.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) probs.push_back(scalar_traits<T>::from_fraction(n - k, n) * p);
    probs.push_back(ring::zero<T>());
    return make_process<T>(std::move(probs));
}

// Stop probability q_j = (n - (n-j)p)/n.
template <class T>
T stop_probability(int n, const T& p, int j) {
    return ring::one<T>() - scalar_traits<T>::from_fraction(n - j, n) * p;
}

// Binomial-mixture PMF: C(n,k) sum_j (-1)^{k-j} C(k,j) q_j^t.
template <class T>
T pmf(int n, const T& p, int k, long t) {
    if (n < 1) throw std::invalid_argument("randomized pmf: population must be >= 1");
    if (t < 0) throw std::invalid_argument("randomized pmf: negative time");
    if (k < 0 || k > n || k > t) return ring::zero<T>();
    T acc = ring::zero<T>();
    for (int j = 0; j <= k; ++j) {
        T term = ring::from_mpz<T>(binomial(k, j)) * scalar_traits<T>::pow(stop_probability(n, p, j), static_cast<unsigned long>(t));
        acc = ((k - j) % 2 == 0) ? acc + term : acc - term;
    }
    return ring::from_mpz<T>(binomial(n, k)) * acc;
}

// CDF (n-k) C(n,k) sum_j (-1)^{k-j} C(k,j) q_j^t / (n-j); k = n gives 1.
template <class T>
T cdf(int n, const T& p, int k, long t) {
    if (n < 1) throw std::invalid_argument("randomized cdf: population must be >= 1");
    if (t < 0) throw std::invalid_argument("randomized cdf: negative time");
    if (k < 0) return ring::zero<T>();
    if (k >= n) return ring::one<T>();
    T acc = ring::zero<T>();
    for (int j = 0; j <= k; ++j) {
        T term = ring::from_mpz<T>(binomial(k, j)) * scalar_traits<T>::pow(stop_probability(n, p, j), static_cast<unsigned long>(t)) /
                 ring::from_mpz<T>(mpz_class(n - j));
        acc = ((k - j) % 2 == 0) ? acc + term : acc - term;
    }
    return ring::from_mpz<T>(mpz_class(n - k) * binomial(n, k)) * acc;
}

// The answer to Harkness's question:
// Pr(X_t = k | X_0 = r) = C(n-r, n-k) sum_j (-1)^{k-r-j} C(k-r, j) q_{j+r}^t.
template <class T>
T pmf_conditioned(int n, const T& p, int r, int k, long t) {
    if (n < 1) throw std::invalid_argument("randomized pmf_conditioned: population must be >= 1");
    if (r < 0 || r > n) throw std::invalid_argument("randomized pmf_conditioned: initial state out of range");
    if (t < 0) throw std::invalid_argument("randomized pmf_conditioned: negative time");
    if (k < r || k > n) return ring::zero<T>();
    T acc = ring::zero<T>();
    for (int j = 0; j <= k - r; ++j) {
        T term = ring::from_mpz<T>(binomial(k - r, j)) *
                 scalar_traits<T>::pow(stop_probability(n, p, j + r), static_cast<unsigned long>(t));
        acc = ((k - r - j) % 2 == 0) ? acc + term : acc - term;
    }
    return ring::from_mpz<T>(binomial(n - r, n - k)) * acc;
}

// Same U and U^-1 as the classical chain; eigenvalues (n-(n-j)p)/n.
occupancy::EigenSystem eigen_system(int n, const Rational& p);

// Complementary-CDF table rows via the bidiagonal recurrence.
template <class T>
std::vector<std::vector<T>> ccdf_table(int n, const T& p, long t_max, int k_max) {
    return purebirth::ccdf_table(randomized_process<T>(n, p), t_max, k_max);
}

template <class T>
struct Moments {
    T mean_x{};
    T variance{};
    std::vector<T> factorial_moments_y;  // E[(Y_t)_k], k = 0..n
};

// E[(Y_t)_k] = (n)_k (1 - kp/n)^t; E[X_t] = n - n(1-p/n)^t; variance with
// the (1-p/n)^t and (1-2p/n)^t terms.
template <class T>
Moments<T> moments(int n, const T& p, long t) {
    if (n < 1) throw std::invalid_argument("randomized moments: population must be >= 1");
    if (t < 0) throw std::invalid_argument("randomized moments: negative time");
    const unsigned long ut = static_cast<unsigned long>(t);
    Moments<T> m;
    T one = ring::one<T>();
    T a = scalar_traits<T>::pow(one - p / ring::from_mpz<T>(mpz_class(n)), ut);                          // (1-p/n)^t
    T b = scalar_traits<T>::pow(one - (p + p) / ring::from_mpz<T>(mpz_class(n)), ut);                    // (1-2p/n)^t
    T nn = ring::from_mpz<T>(mpz_class(n));
    m.mean_x = nn - nn * a;
    m.variance = nn * a + ring::from_mpz<T>(mpz_class(n) * (n - 1)) * b - nn * nn * a * a;
    m.factorial_moments_y.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        T factor = scalar_traits<T>::pow(one - ring::from_mpz<T>(mpz_class(k)) * p / nn, ut);
        m.factorial_moments_y.push_back(ring::from_mpz<T>(falling_factorial(n, k)) * factor);
    }
    return m;
}

}  // namespace purebirth::randomized
