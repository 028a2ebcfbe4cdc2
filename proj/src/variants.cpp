#include "purebirth/variants.hpp"

namespace purebirth::variants {

ComplementaryOccupancyModel complementary_model(int n) {
    return ComplementaryOccupancyModel{n, comp_process<Rational>(n)};
}

Rational comp_pmf_rstirling_exact(int n, int r, int k, long t) {
    if (n < 2) throw std::invalid_argument("complementary chain: population must be >= 2");
    if (r < 1 || r > n) throw std::invalid_argument("complementary chain: initial state out of range");
    if (k < r || k > n) return Rational(0);
    std::vector<mpz_class> vars;
    vars.reserve(static_cast<std::size_t>(k - r) + 1);
    for (int v = n - r; v >= n - k; --v) vars.emplace_back(v);
    mpz_class h = h_complete<mpz_class>(t - k + r, vars);
    mpz_class weight = 1;
    for (int j = r; j < k; ++j) weight *= j;  // (k-1)!/(r-1)!
    return Rational(weight * h, mpz_pow(mpz_class(n), static_cast<unsigned long>(t)));
}

Rational comp_ccdf_closed_exact(int n, int k, long t) {
    if (n < 2) throw std::invalid_argument("comp_ccdf: population must be >= 2");
    if (k < 1 || k >= n) throw std::invalid_argument("comp_ccdf: state out of range");
    std::vector<mpz_class> vars;
    vars.reserve(static_cast<std::size_t>(k) + 1);
    for (int v = n; v >= n - k; --v) vars.emplace_back(v);
    mpz_class h = h_complete<mpz_class>(t - k, vars);
    mpz_class kfact;
    mpz_fac_ui(kfact.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(kfact * h, mpz_pow(mpz_class(n), static_cast<unsigned long>(t)));
}

std::vector<Rational> absorption_probabilities(int n, long t) {
    if (n < 2) throw std::invalid_argument("absorption_probabilities: population must be >= 2");
    if (t < 1) throw std::invalid_argument("absorption_probabilities: time must be >= 1");
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    // Seed: absorption from state 1 equals Pr(X^_t > n-1).
    out[0] = comp_ccdf_closed_exact(n, n - 1, t);
    for (int k = 2; k <= n; ++k) {
        // p^_{k-1,n-1}^{(t)} is an interior column of the same chain and is
        // therefore available in closed form.
        Rational interior = comp_pmf_rstirling_exact(n, k - 1, n - 1, t);
        out[static_cast<std::size_t>(k - 1)] = out[static_cast<std::size_t>(k - 2)] + Rational(n - 1, k - 1) * interior;
    }
    std::vector<Rational> check = absorption_probabilities_partial_sum(n, t);
    if (check != out) throw std::logic_error("absorption_probabilities: recurrence and partial-sum forms disagree");
    return out;
}

std::vector<Rational> absorption_probabilities_partial_sum(int n, long t) {
    if (n < 2) throw std::invalid_argument("absorption_probabilities: population must be >= 2");
    if (t < 1) throw std::invalid_argument("absorption_probabilities: time must be >= 1");
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    Rational seed = comp_ccdf_closed_exact(n, n - 1, t);
    Rational running(0);
    out[0] = seed;
    for (int k = 2; k <= n; ++k) {
        running += Rational(1, k - 1) * comp_pmf_rstirling_exact(n, k - 1, n - 1, t);
        out[static_cast<std::size_t>(k - 1)] = seed + Rational(n - 1) * running;
    }
    return out;
}

Rational binom_pmf_exact(int n, int k) {
    if (n < 1) throw std::invalid_argument("binom_pmf: n must be >= 1");
    return Rational(binomial(n, k), mpz_pow(mpz_class(2), static_cast<unsigned long>(n)));
}

double binom_pmf_float(int n, int k) {
    return binom_pmf_exact(n, k).to_double();
}

PartialSumTriangle::PartialSumTriangle(int n_max) : n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("PartialSumTriangle: negative size");
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    rows_[0] = {mpz_class(1), mpz_class(0)};  // (2^0, Sbar(0,0))
    for (int n = 1; n <= n_max; ++n) {
        const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 2);
        row[0] = 2 * prev[0];  // doubling left border, 2^n
        for (int k = 0; k < n; ++k) {
            // Pascal step over the extended row, Sbar(k,n-1) + Sbar(k-1,n-1).
            row[static_cast<std::size_t>(k) + 1] = prev[static_cast<std::size_t>(k) + 1] + prev[static_cast<std::size_t>(k)];
        }
        row[static_cast<std::size_t>(n) + 1] = 0;  // Sbar(n,n)
    }
    for (int n = 0; n <= n_max; ++n) {
        for (int k = -1; k <= n; ++k) {
            if (sbar(k, n) != sbar_direct(k, n)) throw std::logic_error("PartialSumTriangle: recurrence disagrees with direct summation");
        }
    }
}

const mpz_class& PartialSumTriangle::sbar(int k, int n) const {
    if (n < 0 || n > n_max_ || k < -1 || k > n) throw std::invalid_argument("PartialSumTriangle: index out of range");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k + 1)];
}

std::vector<mpz_class> PartialSumTriangle::display_row(int n) const {
    if (n < 0 || n > n_max_) throw std::invalid_argument("PartialSumTriangle: row out of range");
    const auto& row = rows_[static_cast<std::size_t>(n)];
    return std::vector<mpz_class>(row.begin(), row.end() - 1);
}

mpz_class sbar_direct(int k, int n) {
    mpz_class acc = 0;
    for (int j = k + 1; j <= n; ++j) acc += binomial(n, j);
    return acc;
}

mpz_class sbar_duality(int k, int n) {
    // Sbar(k,n) = (1/2) sum_{j=k}^{n-1} 2^{n-j} C(j,k)
    mpz_class acc = 0;
    for (int j = k; j <= n - 1; ++j) {
        acc += mpz_pow(mpz_class(2), static_cast<unsigned long>(n - j)) * binomial(j, k);
    }
    return acc / 2;
}

}  // namespace purebirth::variants
