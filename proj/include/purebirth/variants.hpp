// Appendix variants: the complementary occupancy chain with interchanged
// transition/stop probabilities, its absorption-probability recurrences and
// hitting times, and the fair binomial chain with its partial-sum triangle.
//
// The complementary chain lives on states 1..n in the source material;
// internally everything is shifted to a 0-based pure birth process and
// shifted back at this interface.
#pragma once

#include "purebirth/matrix.hpp"
#include "purebirth/pbp.hpp"

namespace purebirth::variants {

struct ComplementaryOccupancyModel {
    int n;
    PureBirthProcess<Rational> process;  // states 1..n relabeled to 0..n-1
};

ComplementaryOccupancyModel complementary_model(int n);

// Chain restricted to states r..n, relabeled to 0..n-r: transition
// probability (r+i)/n at relabeled state i.
template <class T>
PureBirthProcess<T> comp_subprocess(int n, int r) {
    if (n < 2) throw std::invalid_argument("complementary chain: population must be >= 2");
    if (r < 1 || r > n - 1) throw std::invalid_argument("complementary chain: initial state out of range");
    std::vector<T> p;
    p.reserve(static_cast<std::size_t>(n - r) + 1);
    for (int j = r; j < n; ++j) p.push_back(scalar_traits<T>::from_fraction(j, n));
    p.push_back(ring::zero<T>());
    return make_process<T>(std::move(p));
}

template <class T>
PureBirthProcess<T> comp_process(int n) {
    return comp_subprocess<T>(n, 1);
}

// Pr(X^_t = k | X^_0 = r) through the general pure-birth machinery. Agrees
// with the closed r-Stirling form for k < n; for k = n the absorbing state's
// unit stop weight makes this the true occupancy of the final state.
template <class T>
T comp_pmf_conditioned(int n, int r, int k, long t) {
    if (n < 2) throw std::invalid_argument("complementary chain: population must be >= 2");
    if (r < 1 || r > n) throw std::invalid_argument("complementary chain: initial state out of range");
    if (k < r || k > n) return ring::zero<T>();
    if (r == n) return k == n ? ring::one<T>() : ring::zero<T>();
    return pmf_general(comp_subprocess<T>(n, r), k - r, t);
}

template <class T>
T comp_pmf(int n, int k, long t) {
    return comp_pmf_conditioned<T>(n, 1, k, t);
}

// Closed form (1/n^t) ((k-1)!/(r-1)!) h_{t-k+r}(n-r, ..., n-k), valid for
// interior targets k < n; at k = n it instead yields Pr(T^_n = t).
Rational comp_pmf_rstirling_exact(int n, int r, int k, long t);

// Pr(X^_t > k) = k! h_{t-k}(n, n-1, ..., n-k) / n^t for 1 <= k < n.
template <class T>
T comp_ccdf(int n, int k, long t) {
    if (n < 2) throw std::invalid_argument("comp_ccdf: population must be >= 2");
    if (k < 1 || k >= n) throw std::invalid_argument("comp_ccdf: state out of range");
    return ccdf_general(comp_process<T>(n), k - 1, t);
}

Rational comp_ccdf_closed_exact(int n, int k, long t);

// Absorption probabilities p^_{k,n}^{(t)} = Pr(X^_t = n | X^_0 = k) for
// k = 1..n, built from the one-term recurrence
// p^_{k,n} = p^_{k-1,n} + (n-1)/(k-1) p^_{k-1,n-1} seeded by the
// r-Stirling-expressible entries; cross-checked against the unrolled
// partial-sum form before returning.
std::vector<Rational> absorption_probabilities(int n, long t);

// The unrolled corollary form, exposed separately for testing.
std::vector<Rational> absorption_probabilities_partial_sum(int n, long t);

// E[T^_k] = n H_{k-1}, V[T^_k] = n sum_{j<k} (n-j)/j^2, for 2 <= k <= n.
template <class T>
HittingTimeMoments<T> comp_hitting_moments(int n, int k) {
    if (n < 2) throw std::invalid_argument("comp_hitting_moments: population must be >= 2");
    if (k < 2 || k > n) throw std::invalid_argument("comp_hitting_moments: state out of range");
    HittingTimeMoments<T> m;
    m.state = k;
    m.mean = ring::zero<T>();
    m.variance = ring::zero<T>();
    for (int j = 1; j < k; ++j) {
        m.mean = m.mean + scalar_traits<T>::from_fraction(n, j);
        m.variance = m.variance + scalar_traits<T>::from_fraction(n, j) * scalar_traits<T>::from_fraction(n - j, j);
    }
    return m;
}

// Fair sequential sampling from the power set: all interior transition
// probabilities 1/2 over states 0..n.
template <class T>
PureBirthProcess<T> binomial_chain(int n) {
    if (n < 1) throw std::invalid_argument("binomial_chain: n must be >= 1");
    std::vector<T> p(static_cast<std::size_t>(n) + 1, scalar_traits<T>::from_fraction(1, 2));
    p.back() = ring::zero<T>();
    return make_process<T>(std::move(p));
}

Rational binom_pmf_exact(int n, int k);
double binom_pmf_float(int n, int k);

// Partial sums of binomial coefficients: Sbar(k,n) = sum_{j>k} C(n,j),
// built by the Pascal-style recurrence with a doubling left border, the
// 2^n column kept as the leading entry of each row.
class PartialSumTriangle {
public:
    explicit PartialSumTriangle(int n_max);

    int n_max() const { return n_max_; }

    // Sbar(k, n) for -1 <= k <= n; k = -1 is the 2^n column, Sbar(n,n) = 0.
    const mpz_class& sbar(int k, int n) const;

    // Row as displayed: (2^n, Sbar(0,n), ..., Sbar(n-1,n)).
    std::vector<mpz_class> display_row(int n) const;

private:
    int n_max_;
    std::vector<std::vector<mpz_class>> rows_;  // rows_[n][k+1] = Sbar(k,n)
};

// Direct-summation and duality cross-checks for one entry.
mpz_class sbar_direct(int k, int n);
mpz_class sbar_duality(int k, int n);

}  // namespace purebirth::variants
