// Computational kernels: complete homogeneous symmetric polynomials,
// Stirling and r-Stirling numbers of the second kind, finite differences.
#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "purebirth/numerics.hpp"

namespace purebirth {

namespace ring {

template <class T>
inline T zero() { return T(0); }
template <>
inline LogFloat zero<LogFloat>() { return LogFloat::zero(); }

template <class T>
inline T one() { return T(1); }
template <>
inline LogFloat one<LogFloat>() { return LogFloat::from_log(0.0); }

template <class T>
inline T from_mpz(const mpz_class& z) { return T(z); }
template <>
inline double from_mpz<double>(const mpz_class& z) { return z.get_d(); }
template <>
inline mpz_class from_mpz<mpz_class>(const mpz_class& z) { return z; }

}  // namespace ring

// h_d over the variable list, by the splitting recurrence arranged as a
// dynamic program: variables outer, degree inner, O(d*|vars|) time, O(d)
// space. h_0 = 1 (also for an empty list), h_d = 0 for d < 0.
template <class T>
T h_complete(long d, std::span<const T> vars) {
    if (d < 0) return ring::zero<T>();
    if (d == 0) return ring::one<T>();
    std::vector<T> h(static_cast<std::size_t>(d) + 1, ring::zero<T>());
    h[0] = ring::one<T>();
    for (const T& x : vars) {
        for (long j = 1; j <= d; ++j) {
            h[j] = h[j] + x * h[j - 1];
        }
    }
    return h[static_cast<std::size_t>(d)];
}

template <class T>
T h_complete(long d, const std::vector<T>& vars) {
    return h_complete<T>(d, std::span<const T>(vars));
}

namespace detail {

inline void require_distinct(std::span<const Rational> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw std::domain_error("h_sylvester: duplicate variables");
}

inline void require_distinct(std::span<const double> vars, double gap_tol) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (std::abs(vars[i] - vars[j]) < gap_tol)
                throw std::domain_error("h_sylvester: variables closer than the distinctness tolerance");
}

}  // namespace detail

inline constexpr double kSylvesterGapTol = 1e-9;

// Closed form h_{t-k}(X_0..X_k) = sum_j X_j^t prod_{i!=j} 1/(X_j - X_i),
// t = d + k. Requires pairwise-distinct variables: exact inequality for
// Rational, a minimum absolute gap for float.
template <class T>
T h_sylvester(long d, std::span<const T> vars, double gap_tol = kSylvesterGapTol) {
    static_assert(!std::is_same_v<T, LogFloat>, "h_sylvester needs subtraction; log-space values do not support it");
    if (d < 0) throw std::invalid_argument("h_sylvester: degree must be nonnegative");
    if (vars.empty()) throw std::invalid_argument("h_sylvester: empty variable list");
    if constexpr (std::is_same_v<T, Rational>) {
        detail::require_distinct(vars);
    } else {
        detail::require_distinct(vars, gap_tol);
    }
    const std::size_t k = vars.size() - 1;
    const unsigned long t = static_cast<unsigned long>(d) + static_cast<unsigned long>(k);
    T total = ring::zero<T>();
    for (std::size_t j = 0; j <= k; ++j) {
        T term = scalar_traits<T>::pow(vars[j], t);
        for (std::size_t i = 0; i <= k; ++i) {
            if (i == j) continue;
            term = term / (vars[j] - vars[i]);
        }
        total = total + term;
    }
    return total;
}

template <class T>
T h_sylvester(long d, const std::vector<T>& vars, double gap_tol = kSylvesterGapTol) {
    return h_sylvester<T>(d, std::span<const T>(vars), gap_tol);
}

// C(n, k); zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);

// Falling factorial (n)_k = n (n-1) ... (n-k+1).
mpz_class falling_factorial(long n, long k);

mpz_class mpz_pow(const mpz_class& base, unsigned long e);

// S(t, k) = h_{t-k}(0, 1, ..., k).
mpz_class stirling2(long t, long k);

// r-Stirling number of the second kind with upper index t and lower index
// (r, k), in the convention {t \brace r,k} = h_{t-k}(r, r+1, ..., k); zero
// for t < k. Callers wanting the shifted form {t+r \brace r,k} pass t+r.
mpz_class r_stirling2(long t, long r, long k);

// k-th order forward difference sum_{j} (-1)^{order-j} C(order,j) f(base+j),
// evaluated as the plain alternating sum in ascending j.
template <class T, class F>
T finite_difference(F&& f, long order, const T& base) {
    static_assert(!std::is_same_v<T, LogFloat>, "finite_difference alternates signs; log-space values do not support it");
    if (order < 0) throw std::invalid_argument("finite_difference: negative order");
    T acc = ring::zero<T>();
    for (long j = 0; j <= order; ++j) {
        T term = ring::from_mpz<T>(binomial(order, j)) * f(base + ring::from_mpz<T>(mpz_class(j)));
        if ((order - j) % 2 == 0) {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    return acc;
}

}  // namespace purebirth
