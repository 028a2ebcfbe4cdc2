// Discrete-time pure birth processes: construction, transition matrices,
// exact PMF/CDF/CCDF in general and distinct-transition closed forms, the
// bidiagonal distribution recurrences, and hitting-time moments.
//
// States are 0..n with state n absorbing. The process starts in state 0;
// p_k is the probability of moving k -> k+1 and q_k = 1 - p_k of staying.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "purebirth/kernels.hpp"
#include "purebirth/numerics.hpp"
#include "purebirth/sympoly.hpp"

namespace purebirth {

template <class T>
class PureBirthProcess {
public:
    PureBirthProcess(std::vector<T> transition, std::vector<T> stop)
        : p_(std::move(transition)), q_(std::move(stop)) {}

    int n() const { return static_cast<int>(p_.size()) - 1; }
    const std::vector<T>& transition_probs() const { return p_; }
    const std::vector<T>& stop_probs() const { return q_; }
    const T& p(int k) const { return p_.at(static_cast<std::size_t>(k)); }
    const T& q(int k) const { return q_.at(static_cast<std::size_t>(k)); }

private:
    std::vector<T> p_;
    std::vector<T> q_;
};

namespace detail {

inline bool in_unit_interval(const Rational& x) { return x.sign() >= 0 && x <= Rational(1); }
inline bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace detail

// Validates the transition vector (entries in [0,1], final entry zero,
// length at least two) and derives the stop probabilities.
template <class T>
PureBirthProcess<T> make_process(std::vector<T> p) {
    static_assert(!std::is_same_v<T, LogFloat>, "build the process in exact or float form, then convert_process to log space");
    if (p.size() < 2) throw std::invalid_argument("make_process: need at least two states");
    for (const T& x : p) {
        if (!detail::in_unit_interval(x)) throw std::domain_error("make_process: transition probability outside [0,1]");
    }
    if (!scalar_traits<T>::is_zero(p.back())) throw std::domain_error("make_process: final state must be absorbing (last entry zero)");
    std::vector<T> q;
    q.reserve(p.size());
    for (const T& x : p) q.push_back(ring::one<T>() - x);
    return PureBirthProcess<T>(std::move(p), std::move(q));
}

template <class To, class From>
PureBirthProcess<To> convert_process(const PureBirthProcess<From>& proc) {
    std::vector<To> p, q;
    p.reserve(proc.transition_probs().size());
    q.reserve(proc.stop_probs().size());
    for (const From& x : proc.transition_probs()) p.push_back(To(scalar_traits<From>::to_double(x)));
    for (const From& x : proc.stop_probs()) q.push_back(To(scalar_traits<From>::to_double(x)));
    return PureBirthProcess<To>(std::move(p), std::move(q));
}

template <>
inline PureBirthProcess<LogFloat> convert_process<LogFloat, Rational>(const PureBirthProcess<Rational>& proc) {
    std::vector<LogFloat> p, q;
    for (const Rational& x : proc.transition_probs()) p.push_back(LogFloat::from_value(x.to_double()));
    for (const Rational& x : proc.stop_probs()) q.push_back(LogFloat::from_value(x.to_double()));
    return PureBirthProcess<LogFloat>(std::move(p), std::move(q));
}

template <>
inline PureBirthProcess<LogFloat> convert_process<LogFloat, double>(const PureBirthProcess<double>& proc) {
    std::vector<LogFloat> p, q;
    for (double x : proc.transition_probs()) p.push_back(LogFloat::from_value(x));
    for (double x : proc.stop_probs()) q.push_back(LogFloat::from_value(x));
    return PureBirthProcess<LogFloat>(std::move(p), std::move(q));
}

// Sparse bidiagonal square matrix: a diagonal plus the superdiagonal.
template <class T>
struct BidiagonalMatrix {
    std::vector<T> diag;
    std::vector<T> super;  // one entry fewer than diag

    int dimension() const { return static_cast<int>(diag.size()); }

    T at(int i, int j) const {
        if (i == j) return diag.at(static_cast<std::size_t>(i));
        if (j == i + 1) return super.at(static_cast<std::size_t>(i));
        return ring::zero<T>();
    }
};

template <class T>
struct StateDistribution {
    long t = 0;
    std::vector<T> probs;  // states 0..n
};

template <class T>
struct HittingTimeMoments {
    int state = 0;
    T mean{};
    T variance{};
};

// P: diagonal (q_0, ..., q_{n-1}, 1), superdiagonal (p_0, ..., p_{n-1}).
template <class T>
BidiagonalMatrix<T> transition_matrix(const PureBirthProcess<T>& proc) {
    BidiagonalMatrix<T> m;
    m.diag = proc.stop_probs();
    m.super = proc.transition_probs();
    m.super.pop_back();
    return m;
}

// C: P with the main diagonal cyclically shifted one step, so powers of C
// accrue the complementary distribution in the top row:
// [C^t]_{0,j} = Pr(X_t >= j).
template <class T>
BidiagonalMatrix<T> ccdf_matrix(const PureBirthProcess<T>& proc) {
    BidiagonalMatrix<T> m;
    m.diag.reserve(proc.stop_probs().size());
    m.diag.push_back(ring::one<T>());
    for (std::size_t i = 0; i + 1 < proc.stop_probs().size(); ++i) m.diag.push_back(proc.stop_probs()[i]);
    m.super = proc.transition_probs();
    m.super.pop_back();
    return m;
}

// Pr(X_t = k) = h_{t-k}(q_0, ..., q_k) * prod_{i<k} p_i.
template <class T>
T pmf_general(const PureBirthProcess<T>& proc, int k, long t) {
    if (k < 0 || k > proc.n()) throw std::invalid_argument("pmf_general: state out of range");
    if (t < 0) throw std::invalid_argument("pmf_general: negative time");
    std::span<const T> q(proc.stop_probs().data(), static_cast<std::size_t>(k) + 1);
    T h = h_complete<T>(t - k, q);
    T w = ring::one<T>();
    for (int i = 0; i < k; ++i) w = w * proc.p(i);
    return h * w;
}

// Pr(X_t > k) = h_{t-k-1}(q_0, ..., q_k, 1) * prod_{i<=k} p_i.
template <class T>
T ccdf_general(const PureBirthProcess<T>& proc, int k, long t) {
    if (k < 0 || k > proc.n()) throw std::invalid_argument("ccdf_general: state out of range");
    if (t < 0) throw std::invalid_argument("ccdf_general: negative time");
    std::vector<T> vars(proc.stop_probs().begin(), proc.stop_probs().begin() + k + 1);
    vars.push_back(ring::one<T>());
    T h = h_complete<T>(t - k - 1, vars);
    T w = ring::one<T>();
    for (int i = 0; i <= k; ++i) w = w * proc.p(i);
    return h * w;
}

// Sylvester closed form of the PMF; requires pairwise-distinct stop
// probabilities. Numerically reliable only for small k in float mode.
template <class T>
T pmf_distinct(const PureBirthProcess<T>& proc, int k, long t, double gap_tol = kSylvesterGapTol) {
    static_assert(!std::is_same_v<T, LogFloat>, "pmf_distinct needs subtraction; use pmf_general in log space");
    if (k < 0 || k > proc.n()) throw std::invalid_argument("pmf_distinct: state out of range");
    if (t < 0) throw std::invalid_argument("pmf_distinct: negative time");
    if (t < k) return ring::zero<T>();
    std::span<const T> q(proc.stop_probs().data(), static_cast<std::size_t>(k) + 1);
    T h = h_sylvester<T>(t - k, q, gap_tol);
    T w = ring::one<T>();
    for (int i = 0; i < k; ++i) w = w * proc.p(i);
    return h * w;
}

// Sylvester closed form of the CDF:
// (prod_{j<=k} p_j) sum_j q_j^{t-k}/(1-q_j) prod_{i!=j} 1/(q_j - q_i).
template <class T>
T cdf_distinct(const PureBirthProcess<T>& proc, int k, long t, double gap_tol = kSylvesterGapTol) {
    static_assert(!std::is_same_v<T, LogFloat>, "cdf_distinct needs subtraction");
    if (k < 0 || k > proc.n()) throw std::invalid_argument("cdf_distinct: state out of range");
    if (t < 0) throw std::invalid_argument("cdf_distinct: negative time");
    if (t <= k) return ring::one<T>();
    std::span<const T> q(proc.stop_probs().data(), static_cast<std::size_t>(k) + 1);
    if constexpr (std::is_same_v<T, Rational>) {
        detail::require_distinct(q);
    } else {
        detail::require_distinct(q, gap_tol);
    }
    T total = ring::zero<T>();
    for (int j = 0; j <= k; ++j) {
        if (scalar_traits<T>::is_zero(proc.p(j))) throw std::domain_error("cdf_distinct: q_j = 1 in the geometric-series form");
        T term = scalar_traits<T>::pow(proc.q(j), static_cast<unsigned long>(t - k)) / proc.p(j);
        for (int i = 0; i <= k; ++i) {
            if (i == j) continue;
            term = term / (proc.q(j) - proc.q(i));
        }
        total = total + term;
    }
    T w = ring::one<T>();
    for (int i = 0; i <= k; ++i) w = w * proc.p(i);
    return total * w;
}

namespace detail {

// One time step of the complementary-CDF rows. The recurrence propagates its
// own boundary zeros, so no clause on k vs t is needed beyond the k = 0 rule
// Fbar(-1, t) = 1.
template <class T>
void ccdf_row_step(const PureBirthProcess<T>& proc, const std::vector<T>& prev, std::vector<T>& next) {
    next[0] = proc.p(0) + proc.q(0) * prev[0];
    for (std::size_t k = 1; k < prev.size(); ++k) {
        next[k] = proc.p(static_cast<int>(k)) * prev[k - 1] + proc.q(static_cast<int>(k)) * prev[k];
    }
}

template <>
inline void ccdf_row_step<double>(const PureBirthProcess<double>& proc, const std::vector<double>& prev, std::vector<double>& next) {
    next[0] = std::fma(proc.q(0), prev[0], proc.p(0));
    kernels::active_row_step()(proc.transition_probs().data(), proc.stop_probs().data(), prev.data(), next.data(), prev.size());
}

// One time step of the CDF rows; F(-1, t) = 0.
template <class T>
void cdf_row_step(const PureBirthProcess<T>& proc, const std::vector<T>& prev, std::vector<T>& next) {
    next[0] = proc.q(0) * prev[0];
    for (std::size_t k = 1; k < prev.size(); ++k) {
        next[k] = proc.p(static_cast<int>(k)) * prev[k - 1] + proc.q(static_cast<int>(k)) * prev[k];
    }
}

template <>
inline void cdf_row_step<double>(const PureBirthProcess<double>& proc, const std::vector<double>& prev, std::vector<double>& next) {
    next[0] = proc.q(0) * prev[0];
    kernels::active_row_step()(proc.transition_probs().data(), proc.stop_probs().data(), prev.data(), next.data(), prev.size());
}

}  // namespace detail

// Streams the rows Fbar(., t) for t = 0..t_max to the visitor, O(k_max)
// working space. visitor(t, row) with row[k] = Pr(X_t > k), k = 0..k_max.
template <class T, class Visitor>
void for_each_ccdf_row(const PureBirthProcess<T>& proc, long t_max, int k_max, Visitor&& visitor) {
    if (t_max < 0 || k_max < 0 || k_max > proc.n()) throw std::invalid_argument("for_each_ccdf_row: bad bounds");
    std::vector<T> prev(static_cast<std::size_t>(k_max) + 1, ring::zero<T>());
    std::vector<T> next(prev.size(), ring::zero<T>());
    visitor(0L, static_cast<const std::vector<T>&>(prev));
    for (long t = 1; t <= t_max; ++t) {
        detail::ccdf_row_step(proc, prev, next);
        prev.swap(next);
        visitor(t, static_cast<const std::vector<T>&>(prev));
    }
}

template <class T, class Visitor>
void for_each_cdf_row(const PureBirthProcess<T>& proc, long t_max, int k_max, Visitor&& visitor) {
    if (t_max < 0 || k_max < 0 || k_max > proc.n()) throw std::invalid_argument("for_each_cdf_row: bad bounds");
    std::vector<T> prev(static_cast<std::size_t>(k_max) + 1, ring::one<T>());
    std::vector<T> next(prev.size(), ring::zero<T>());
    visitor(0L, static_cast<const std::vector<T>&>(prev));
    for (long t = 1; t <= t_max; ++t) {
        detail::cdf_row_step(proc, prev, next);
        prev.swap(next);
        visitor(t, static_cast<const std::vector<T>&>(prev));
    }
}

// Full table, rows t = 0..t_max, columns k = 0..k_max. Materializes
// (t_max+1)(k_max+1) values; use the row streaming above for large t.
template <class T>
std::vector<std::vector<T>> ccdf_table(const PureBirthProcess<T>& proc, long t_max, int k_max) {
    std::vector<std::vector<T>> table;
    table.reserve(static_cast<std::size_t>(t_max) + 1);
    for_each_ccdf_row(proc, t_max, k_max, [&](long, const std::vector<T>& row) { table.push_back(row); });
    return table;
}

template <class T>
std::vector<std::vector<T>> cdf_table(const PureBirthProcess<T>& proc, long t_max, int k_max) {
    std::vector<std::vector<T>> table;
    table.reserve(static_cast<std::size_t>(t_max) + 1);
    for_each_cdf_row(proc, t_max, k_max, [&](long, const std::vector<T>& row) { table.push_back(row); });
    return table;
}

// Final row only: row[k] = Pr(X_t > k) for k = 0..k_max.
template <class T>
std::vector<T> ccdf_row(const PureBirthProcess<T>& proc, long t, int k_max) {
    std::vector<T> out;
    for_each_ccdf_row(proc, t, k_max, [&](long s, const std::vector<T>& row) {
        if (s == t) out = row;
    });
    return out;
}

// E[T_k] = sum_{i<k} 1/p_i, V[T_k] = sum_{i<k} (1-p_i)/p_i^2.
template <class T>
HittingTimeMoments<T> hitting_time_moments(const PureBirthProcess<T>& proc, int k) {
    static_assert(!std::is_same_v<T, LogFloat>, "hitting_time_moments needs subtraction");
    if (k < 1 || k > proc.n()) throw std::invalid_argument("hitting_time_moments: state out of range");
    HittingTimeMoments<T> m;
    m.state = k;
    m.mean = ring::zero<T>();
    m.variance = ring::zero<T>();
    for (int i = 0; i < k; ++i) {
        if (scalar_traits<T>::is_zero(proc.p(i))) throw std::domain_error("hitting_time_moments: state unreachable (p_i = 0)");
        T inv = ring::one<T>() / proc.p(i);
        m.mean = m.mean + inv;
        m.variance = m.variance + proc.q(i) * inv * inv;
    }
    return m;
}

// Pr(T_k = t) = Pr(X_{t-1} = k-1) * p_{k-1}.
template <class T>
T hitting_time_pmf(const PureBirthProcess<T>& proc, int k, long t) {
    if (k < 1 || k > proc.n()) throw std::invalid_argument("hitting_time_pmf: state out of range");
    if (t < 1) throw std::invalid_argument("hitting_time_pmf: time must be >= 1");
    return pmf_general(proc, k - 1, t - 1) * proc.p(k - 1);
}

}  // namespace purebirth
