#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "purebirth/oracle.hpp"
#include "purebirth/variants.hpp"

using namespace purebirth;
namespace var = purebirth::variants;

namespace {

// Dense transition matrix of the complementary chain on paper states 1..n,
// stored 0-based: diag (n-1, n-2, ..., 1, n)/n, superdiag (1, 2, ..., n-1)/n.
Matrix<Rational> comp_dense(int n) {
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n - 1; ++i) {
        m.at(i, i) = Rational(n - 1 - i, n);
        m.at(i, i + 1) = Rational(i + 1, n);
    }
    m.at(n - 1, n - 1) = Rational(1);
    return m;
}

}  // namespace

TEST_CASE("complementary chain construction") {
    auto model = var::complementary_model(4);
    // transition probabilities k/n for paper states k = 1..3
    CHECK(model.process.transition_probs() ==
          std::vector<Rational>{Rational(1, 4), Rational(2, 4), Rational(3, 4), Rational(0)});
    CHECK(model.process.q(0) == Rational(3, 4));
    CHECK(oracle::to_dense(model.process) == comp_dense(4));
}

TEST_CASE("comp_pmf matches the exact matrix oracle, including the absorbing column") {
    for (int n = 2; n <= 6; ++n) {
        auto dense = comp_dense(n);
        for (unsigned long t = 0; t <= 10; ++t) {
            auto power = oracle::matrix_power_exact(dense, t);
            for (int r = 1; r <= n; ++r) {
                for (int k = 1; k <= n; ++k) {
                    Rational expected = power.at(r - 1, k - 1);
                    CHECK(var::comp_pmf_conditioned<Rational>(n, r, k, static_cast<long>(t)) == expected);
                    // The closed r-Stirling form covers interior targets.
                    if (k < n) {
                        CHECK(var::comp_pmf_rstirling_exact(n, r, k, static_cast<long>(t)) == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("comp_pmf anchors") {
    for (int n = 2; n <= 6; ++n) {
        for (int r = 1; r <= n; ++r) CHECK(var::comp_pmf_conditioned<Rational>(n, r, r, 0) == Rational(1));
    }
    // n=2, t=2: the chain leaves state 1 with probability 1/2 per step, so
    // Pr(X^_2 = 2) = 3/4 by the exact oracle; the r-Stirling closed form at
    // the absorbing column yields the first-hitting mass 1/4 instead.
    CHECK(var::comp_pmf<Rational>(2, 2, 2) == Rational(3, 4));
    CHECK(var::comp_pmf_rstirling_exact(2, 1, 2, 2) == Rational(1, 4));

    // Stochasticity over the full state space.
    for (int n = 2; n <= 6; ++n) {
        for (long t = 0; t <= 10; ++t) {
            Rational total(0);
            for (int k = 1; k <= n; ++k) total += var::comp_pmf<Rational>(n, k, t);
            CHECK(total == Rational(1));
        }
    }
}

TEST_CASE("comp_pmf equals pbp machinery on the shifted process") {
    for (int n = 2; n <= 6; ++n) {
        auto shifted = var::comp_process<Rational>(n);
        for (long t = 0; t <= 10; ++t) {
            for (int k = 1; k <= n; ++k) {
                CHECK(var::comp_pmf<Rational>(n, k, t) == pmf_general(shifted, k - 1, t));
            }
        }
    }
}

TEST_CASE("comp_ccdf closed form") {
    // n=2, k=1, t=1: 1! h_0(2,1)/2 = 1/2.
    CHECK(var::comp_ccdf<Rational>(2, 1, 1) == Rational(1, 2));
    CHECK(var::comp_ccdf_closed_exact(2, 1, 1) == Rational(1, 2));

    for (int n = 2; n <= 6; ++n) {
        for (long t = 0; t <= 10; ++t) {
            for (int k = 1; k < n; ++k) {
                Rational general = var::comp_ccdf<Rational>(n, k, t);
                CHECK(general == var::comp_ccdf_closed_exact(n, k, t));
                Rational partial(0);
                for (int j = 1; j <= k; ++j) partial += var::comp_pmf<Rational>(n, j, t);
                CHECK(general + partial == Rational(1));
            }
        }
    }
}

TEST_CASE("cross-population ccdf/pmf relation") {
    // n^t Fbar^(k,t,n) = (n+1)^t f^(k+1,t,n+1)
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k < n; ++k) {
            for (long t = 1; t <= 8; ++t) {
                Rational lhs = Rational(mpz_pow(mpz_class(n), static_cast<unsigned long>(t))) *
                               var::comp_ccdf<Rational>(n, k, t);
                Rational rhs = Rational(mpz_pow(mpz_class(n + 1), static_cast<unsigned long>(t))) *
                               var::comp_pmf_rstirling_exact(n + 1, 1, k + 1, t);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("absorption probabilities: recurrence, partial-sum form, oracle") {
    for (int n = 2; n <= 6; ++n) {
        for (long t = 1; t <= 10; ++t) {
            auto lemma = var::absorption_probabilities(n, t);
            auto rolled = var::absorption_probabilities_partial_sum(n, t);
            CHECK(lemma == rolled);
            auto power = oracle::matrix_power_exact(comp_dense(n), static_cast<unsigned long>(t));
            for (int k = 1; k <= n - 1; ++k) {
                CHECK(lemma[static_cast<std::size_t>(k - 1)] == power.at(k - 1, n - 1));
            }
            CHECK(lemma[static_cast<std::size_t>(n - 1)] == Rational(1));  // started absorbed
        }
    }
}

TEST_CASE("complementary hitting-time moments") {
    auto k2 = var::comp_hitting_moments<Rational>(5, 2);
    CHECK(k2.mean == Rational(5));
    CHECK(k2.variance == Rational(20));  // n(n-1)

    auto k3 = var::comp_hitting_moments<Rational>(3, 3);
    CHECK(k3.mean == Rational(9, 2));  // 3 (1 + 1/2)

    // Same values through the general path on the shifted process.
    for (int n = 2; n <= 7; ++n) {
        auto shifted = var::comp_process<Rational>(n);
        for (int k = 2; k <= n; ++k) {
            auto direct = var::comp_hitting_moments<Rational>(n, k);
            auto general = hitting_time_moments(shifted, k - 1);
            CHECK(direct.mean == general.mean);
            CHECK(direct.variance == general.variance);
        }
    }
}

TEST_CASE("binomial chain") {
    for (int n = 1; n <= 12; ++n) {
        auto chain = var::binomial_chain<Rational>(n);
        Rational total(0);
        for (int k = 0; k <= n; ++k) {
            Rational mass = var::binom_pmf_exact(n, k);
            total += mass;
            CHECK(pmf_general(chain, k, n) == mass);
        }
        CHECK(total == Rational(1));
    }
    CHECK(var::binom_pmf_exact(6, 2) == Rational(15, 64));
}

TEST_CASE("binomial chain ccdf matrix generates complementary partial sums") {
    for (int n = 1; n <= 12; ++n) {
        auto chain = var::binomial_chain<Rational>(n);
        auto c = ccdf_matrix(chain);
        Matrix<Rational> dense(c.dimension(), c.dimension());
        for (int i = 0; i < c.dimension(); ++i)
            for (int j = 0; j < c.dimension(); ++j) dense.at(i, j) = c.at(i, j);
        auto cn = oracle::matrix_power_exact(dense, static_cast<unsigned long>(n));
        for (int j = 1; j <= n; ++j) {
            // [C^n]_{0,j} = Pr(X_n >= j) = Sbar(j-1, n)/2^n
            Rational expected(var::sbar_direct(j - 1, n), mpz_pow(mpz_class(2), static_cast<unsigned long>(n)));
            CHECK(cn.at(0, j) == expected);
        }
    }
}

TEST_CASE("partial-sum triangle rows") {
    var::PartialSumTriangle tri(10);

    CHECK(tri.display_row(6) == std::vector<mpz_class>{64, 63, 57, 42, 22, 7, 1});
    // The printed n=7 row has a typo in its third entry (110); the
    // recurrence and direct summation both give 120.
    CHECK(tri.display_row(7) == std::vector<mpz_class>{128, 127, 120, 99, 64, 29, 8, 1});

    CHECK(tri.display_row(0) == std::vector<mpz_class>{1});
    CHECK(tri.display_row(1) == std::vector<mpz_class>{2, 1});
    CHECK(tri.display_row(2) == std::vector<mpz_class>{4, 3, 1});
    CHECK(tri.display_row(3) == std::vector<mpz_class>{8, 7, 4, 1});
    CHECK(tri.display_row(4) == std::vector<mpz_class>{16, 15, 11, 5, 1});
    CHECK(tri.display_row(5) == std::vector<mpz_class>{32, 31, 26, 16, 6, 1});

    for (int n = 0; n <= 10; ++n) {
        CHECK(tri.sbar(n, n) == 0);
        CHECK(tri.sbar(-1, n) == mpz_pow(mpz_class(2), static_cast<unsigned long>(n)));
        if (n >= 1) CHECK(tri.sbar(n - 1, n) == 1);
    }
}

TEST_CASE("triangle invariants: complements, differences, duality") {
    var::PartialSumTriangle tri(20);
    for (int n = 0; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            mpz_class s = 0;  // ordinary partial sum S(k,n)
            for (int j = 0; j <= k; ++j) s += binomial(n, j);
            CHECK(tri.sbar(k, n) + s == mpz_pow(mpz_class(2), static_cast<unsigned long>(n)));
            CHECK(tri.sbar(k, n) == var::sbar_direct(k, n));
            CHECK(tri.sbar(k, n) == var::sbar_duality(k, n));
        }
        for (int k = 1; k <= n && n <= 10; ++k) {
            CHECK(tri.sbar(k - 1, n) - tri.sbar(k, n) == binomial(n, k));
        }
    }
}
