#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "purebirth/occupancy.hpp"
#include "purebirth/oracle.hpp"

using namespace purebirth;
using namespace purebirth::occupancy;

TEST_CASE("occupancy model construction") {
    auto m9 = occupancy_model(9);
    CHECK(m9.process.n() == 9);
    for (int k = 0; k <= 9; ++k) {
        CHECK(m9.process.p(k) == Rational(9 - k, 9));
        CHECK(m9.process.q(k) == Rational(k, 9));
    }
    auto m1 = occupancy_model(1);
    CHECK(m1.process.transition_probs() == std::vector<Rational>{Rational(1), Rational(0)});
    auto m3 = occupancy_model(3);
    CHECK(m3.process.transition_probs() ==
          std::vector<Rational>{Rational(1), Rational(2, 3), Rational(1, 3), Rational(0)});
    CHECK_THROWS_AS(occupancy_model(0), std::invalid_argument);
}

TEST_CASE("eigen system matrices") {
    auto es = eigen_system(9);
    std::vector<long> row0{1, 9, 36, 84, 126, 126, 84, 36, 9, 1};
    for (int k = 0; k <= 9; ++k) {
        CHECK(es.u.at(0, k) == row0[static_cast<std::size_t>(k)]);
        long sign = (k % 2 == 0) ? 1 : -1;
        CHECK(es.u_inv.at(0, k) == sign * row0[static_cast<std::size_t>(k)]);
    }
    for (int n = 1; n <= 12; ++n) {
        auto e = eigen_system(n);
        CHECK(to_rational(e.u) * to_rational(e.u_inv) == Matrix<Rational>::identity(n + 1));
        CHECK(to_rational(e.sigma) * to_rational(e.sigma_inv) == Matrix<Rational>::identity(n + 1));
    }
}

TEST_CASE("eigendecomposition reconstructs exact matrix powers") {
    for (int n = 1; n <= 8; ++n) {
        auto es = eigen_system(n);
        auto dense = oracle::to_dense(occupancy_process<Rational>(n));
        for (unsigned long t = 0; t <= 10; ++t) {
            CHECK(reconstruct_power(es, t) == oracle::matrix_power_exact(dense, t));
        }
    }
}

TEST_CASE("U_inv * Sigma collapses to the bordered smaller inverse") {
    for (int n = 2; n <= 10; ++n) {
        auto es = eigen_system(n);
        auto es_smaller = eigen_system(n - 1);
        auto prod = to_rational(es.u_inv) * to_rational(es.sigma);
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                Rational expected(0);
                if (i < n && j < n) expected = Rational(es_smaller.u_inv.at(i, j));
                if (i == n && j == n) expected = Rational(1);
                CHECK(prod.at(i, j) == expected);
            }
        }
    }
}

TEST_CASE("pmf anchors from the tuple-enumeration oracle") {
    CHECK(pmf_exact(3, 2, 3) == Rational(2, 3));
    CHECK(pmf_exact(3, 1, 2) == Rational(1, 3));
    for (long t = 1; t <= 10; ++t) CHECK(pmf_exact(3, 0, t) == Rational(0));
}

TEST_CASE("both pmf forms agree exactly and match the oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (long t = 0; t <= 8; ++t) {
            auto tuples = oracle::enumerate_tuples(n, t);
            for (int k = 0; k <= n; ++k) {
                Rational stirling_form = pmf_exact(n, k, t);
                CHECK(stirling_form == pmf_alternating_exact(n, k, t));
                CHECK(stirling_form == tuples.probs[static_cast<std::size_t>(k)]);
            }
        }
    }
}

TEST_CASE("conditioned pmf equals exact matrix powers everywhere") {
    for (int n = 1; n <= 7; ++n) {
        auto dense = oracle::to_dense(occupancy_process<Rational>(n));
        for (unsigned long t = 0; t <= 10; ++t) {
            auto power = oracle::matrix_power_exact(dense, t);
            for (int r = 0; r <= n; ++r) {
                for (int k = 0; k <= n; ++k) {
                    Rational expected = power.at(r, k);
                    CHECK(pmf_conditioned_exact(n, r, k, static_cast<long>(t)) == expected);
                    CHECK(pmf_conditioned_alternating_exact(n, r, k, static_cast<long>(t)) == expected);
                }
            }
        }
    }
}

TEST_CASE("conditioned pmf anchors") {
    // r = k at t = 0 is the identity transition.
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) CHECK(pmf_conditioned_exact(n, r, r, 0) == Rational(1));
    }
    // r = 0 reduces to the unconditional pmf.
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (long t = 0; t <= 10; ++t) {
                CHECK(pmf_conditioned_exact(n, 0, k, t) == pmf_exact(n, k, t));
            }
        }
    }
    CHECK(pmf_conditioned_exact(3, 1, 2, 1) == Rational(2, 3));  // single step, p_1
}

TEST_CASE("conditioned cdf: all three forms and the oracle agree") {
    for (int n = 1; n <= 6; ++n) {
        auto dense = oracle::to_dense(occupancy_process<Rational>(n));
        for (unsigned long t = 0; t <= 10; ++t) {
            auto power = oracle::matrix_power_exact(dense, t);
            for (int r = 0; r <= n; ++r) {
                for (int k = 0; k <= n; ++k) {
                    Rational partial(0);
                    for (int j = 0; j <= k; ++j) partial += power.at(r, j);
                    Rational explicit_form = cdf_conditioned_exact(n, r, k, static_cast<long>(t));
                    CHECK(explicit_form == partial);
                    CHECK(cdf_conditioned_finite_difference_exact(n, r, k, static_cast<long>(t)) == partial);
                }
            }
        }
    }
}

TEST_CASE("cdf anchors") {
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            for (long t = 0; t <= 6; ++t) CHECK(cdf_conditioned_exact(n, r, n, t) == Rational(1));
        }
    }
    CHECK(cdf_conditioned_exact(3, 0, 1, 2) == Rational(1, 3));
}

TEST_CASE("occupancy ccdf matrix fixture and top-row powers") {
    auto c9 = ccdf_matrix_occupancy<Rational>(9);
    CHECK(c9.dimension() == 9);
    CHECK(c9.diag[0] == Rational(1));
    for (int j = 1; j < 9; ++j) CHECK(c9.diag[static_cast<std::size_t>(j)] == Rational(j, 9));
    for (int j = 1; j < 9; ++j) CHECK(c9.super[static_cast<std::size_t>(j - 1)] == Rational(9 - j, 9));

    // Column sums are 1.
    for (int n = 2; n <= 8; ++n) {
        auto c = ccdf_matrix_occupancy<Rational>(n);
        for (int j = 0; j < n; ++j) {
            Rational col = c.at(j, j) + (j > 0 ? c.at(j - 1, j) : Rational(0));
            CHECK(col == Rational(1));
        }
    }

    // The top row of C^t carries the complementary distribution one step
    // ahead: [C^t]_{0,j} = Pr(X_{t+1} > j) = 1 - cdf(j, t+1).
    for (int n = 2; n <= 8; ++n) {
        auto c = ccdf_matrix_occupancy<Rational>(n);
        Matrix<Rational> dense(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dense.at(i, j) = c.at(i, j);
        for (unsigned long t = 0; t + 1 <= 12; ++t) {
            auto ct = oracle::matrix_power_exact(dense, t);
            for (int j = 0; j < n; ++j) {
                CHECK(ct.at(0, j) == Rational(1) - cdf_conditioned_exact(n, 0, j, static_cast<long>(t) + 1));
            }
        }
    }
}

TEST_CASE("eigenvectors of the ccdf matrix") {
    for (int n = 2; n <= 9; ++n) {
        auto v = c_eigenvector_matrix(n);
        auto v_inv = c_eigenvector_matrix_inverse(n);
        CHECK(to_rational(v) * to_rational(v_inv) == Matrix<Rational>::identity(n));

        auto c = ccdf_matrix_occupancy<Rational>(n);
        Matrix<Rational> dense(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dense.at(i, j) = c.at(i, j);
        // C V = V diag(1, 1/n, ..., (n-1)/n)
        auto lhs = dense * to_rational(v);
        auto rhs = to_rational(v);
        for (int j = 0; j < n; ++j) {
            Rational lambda = (j == 0) ? Rational(1) : Rational(j, n);
            for (int i = 0; i < n; ++i) rhs.at(i, j) *= lambda;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mean and variance against distribution moments") {
    CHECK(mean_variance_exact(3, 0) == std::pair(Rational(0), Rational(0)));
    CHECK(mean_variance_exact(3, 1) == std::pair(Rational(1), Rational(0)));
    CHECK(mean_variance_exact(3, 2).first == Rational(5, 3));

    for (int n = 1; n <= 10; ++n) {
        for (long t = 0; t <= 20; ++t) {
            Rational mean(0), second(0);
            for (int k = 0; k <= n; ++k) {
                Rational mass = pmf_exact(n, k, t);
                mean += Rational(k) * mass;
                second += Rational(k) * Rational(k) * mass;
            }
            auto [m, v] = mean_variance_exact(n, t);
            CHECK(m == mean);
            CHECK(v == second - mean * mean);
        }
    }
}

TEST_CASE("limit distribution: transient mass decays monotonically") {
    auto rep0 = limit_distribution_report(3, 0);
    CHECK(rep0.transient_mass == Rational(1));

    auto rep50 = limit_distribution_report(3, 50);
    CHECK(rep50.transient_mass.to_double() < 1e-8);

    for (int n = 1; n <= 6; ++n) {
        Rational prev(2);
        for (long t = 0; t <= 30; ++t) {
            auto rep = limit_distribution_report(n, t);
            CHECK(rep.transient_mass <= prev);
            CHECK(rep.max_transient_pmf <= rep.transient_mass);
            prev = rep.transient_mass;
        }
    }
}

TEST_CASE("r-Stirling row-sum identity") {
    // r = 0 is the classic n^t = sum_j (n)_j S(t,j) after multiplying
    // through; the general form telescopes the row sums of n^t P^t.
    for (int n = 1; n <= 8; ++n) {
        for (int r = 0; r <= n; ++r) {
            for (long t = 0; t <= 10; ++t) {
                CHECK(rowsum_identity_check(n, r, t));
            }
        }
    }
    CHECK(rowsum_identity_check(4, 2, 5));
}

TEST_CASE("smaller-population cdf identity") {
    CHECK(smaller_population_identity_check(3, 1, 2));
    CHECK(smaller_population_identity_check(2, 1, 1));
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k < n; ++k) {
            for (long t = 1; t <= 10; ++t) {
                CHECK(smaller_population_identity_check(n, k, t));
            }
        }
    }
}

TEST_CASE("float-mode forms track the exact values at small k") {
    for (int n = 1; n <= 8; ++n) {
        for (long t = 0; t <= 20; ++t) {
            for (int k = 0; k <= n; ++k) {
                double exact_value = pmf_exact(n, k, t).to_double();
                CHECK(pmf_float(n, k, t) == doctest::Approx(exact_value).epsilon(1e-9));
                double exact_cdf = cdf_conditioned_exact(n, 0, k, t).to_double();
                CHECK(cdf_conditioned_float(n, 0, k, t) == doctest::Approx(exact_cdf).epsilon(1e-9));
            }
        }
    }
}
