#include "purebirth/oracle.hpp"

namespace purebirth::oracle {

Matrix<Rational> to_dense(const PureBirthProcess<Rational>& proc) {
    const int dim = proc.n() + 1;
    Matrix<Rational> m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        m.at(i, i) = proc.q(i);
        if (i + 1 < dim) m.at(i, i + 1) = proc.p(i);
    }
    return m;
}

Matrix<Rational> matrix_power_exact(const Matrix<Rational>& m, unsigned long t) {
    return matrix_pow(m, t);
}

namespace {

void walk_paths(const PureBirthProcess<Rational>& proc, int state, long remaining, const Rational& weight,
                std::vector<Rational>& acc) {
    if (remaining == 0) {
        acc[static_cast<std::size_t>(state)] += weight;
        return;
    }
    walk_paths(proc, state, remaining - 1, weight * proc.q(state), acc);
    if (state < proc.n()) {
        walk_paths(proc, state + 1, remaining - 1, weight * proc.p(state), acc);
    }
}

}  // namespace

StateDistribution<Rational> enumerate_paths(const PureBirthProcess<Rational>& proc, long t, std::uint64_t cap) {
    if (t < 0) throw std::invalid_argument("enumerate_paths: negative time");
    mpz_class count = 0;
    for (long k = 0; k <= std::min<long>(proc.n(), t); ++k) count += binomial(t, k);
    if (count > static_cast<unsigned long>(cap)) throw std::invalid_argument("enumerate_paths: instance too large for exhaustive enumeration");

    StateDistribution<Rational> dist;
    dist.t = t;
    dist.probs.assign(static_cast<std::size_t>(proc.n()) + 1, Rational(0));
    walk_paths(proc, 0, t, Rational(1), dist.probs);
    return dist;
}

StateDistribution<Rational> enumerate_tuples(int n, long t, std::uint64_t cap) {
    if (n < 1) throw std::invalid_argument("enumerate_tuples: population must be positive");
    if (t < 0) throw std::invalid_argument("enumerate_tuples: negative time");
    mpz_class total = mpz_pow(mpz_class(n), static_cast<unsigned long>(t));
    if (total > static_cast<unsigned long>(cap)) throw std::invalid_argument("enumerate_tuples: instance too large for exhaustive enumeration");

    std::vector<mpz_class> counts(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> tuple(static_cast<std::size_t>(t), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::fill(seen.begin(), seen.end(), 0);
        int distinct = 0;
        for (long i = 0; i < t; ++i) {
            if (!seen[static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])]) {
                seen[static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])] = 1;
                ++distinct;
            }
        }
        counts[static_cast<std::size_t>(distinct)] += 1;

        long pos = t - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n - 1) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }

    StateDistribution<Rational> dist;
    dist.t = t;
    dist.probs.reserve(counts.size());
    for (const mpz_class& c : counts) dist.probs.emplace_back(c, total);
    return dist;
}

}  // namespace purebirth::oracle
