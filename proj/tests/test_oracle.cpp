#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "purebirth/occupancy.hpp"
#include "purebirth/oracle.hpp"

using namespace purebirth;

namespace {

PureBirthProcess<Rational> random_process(std::mt19937_64& gen, int n) {
    std::vector<Rational> p;
    for (int k = 0; k < n; ++k) {
        long den = 2 + static_cast<long>(gen() % 11);
        long num = 1 + static_cast<long>(gen() % static_cast<unsigned long>(den - 1));
        p.emplace_back(num, den);
    }
    p.emplace_back(0);
    return make_process<Rational>(std::move(p));
}

}  // namespace

TEST_CASE("matrix_power_exact basics") {
    auto proc = occupancy::occupancy_process<Rational>(3);
    auto dense = oracle::to_dense(proc);
    CHECK(oracle::matrix_power_exact(dense, 0) == Matrix<Rational>::identity(4));

    // occupancy n=3, t=3, row 0 = (0, 3, 18, 6)/27
    auto p3 = oracle::matrix_power_exact(dense, 3);
    CHECK(p3.at(0, 0) == Rational(0));
    CHECK(p3.at(0, 1) == Rational(3, 27));
    CHECK(p3.at(0, 2) == Rational(18, 27));
    CHECK(p3.at(0, 3) == Rational(6, 27));
}

TEST_CASE("matrix power semigroup property") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto proc = random_process(gen, 2 + static_cast<int>(gen() % 4));
        auto dense = oracle::to_dense(proc);
        unsigned long a = gen() % 7, b = gen() % 7;
        auto lhs = oracle::matrix_power_exact(dense, a) * oracle::matrix_power_exact(dense, b);
        CHECK(lhs == oracle::matrix_power_exact(dense, a + b));
    }
}

TEST_CASE("enumerate_paths basics") {
    std::mt19937_64 gen(6);
    auto proc = random_process(gen, 4);

    auto d0 = oracle::enumerate_paths(proc, 0);
    CHECK(d0.probs[0] == Rational(1));
    for (int k = 1; k <= 4; ++k) CHECK(d0.probs[static_cast<std::size_t>(k)] == Rational(0));

    auto d1 = oracle::enumerate_paths(proc, 1);
    CHECK(d1.probs[0] == proc.q(0));
    CHECK(d1.probs[1] == proc.p(0));
    CHECK(d1.probs[2] == Rational(0));
}

TEST_CASE("the two process oracles agree on random processes") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(gen() % 6);
        long t = static_cast<long>(gen() % 11);
        auto proc = random_process(gen, n);
        auto paths = oracle::enumerate_paths(proc, t);
        auto power = oracle::matrix_power_exact(oracle::to_dense(proc), static_cast<unsigned long>(t));
        for (int k = 0; k <= n; ++k) {
            CHECK(paths.probs[static_cast<std::size_t>(k)] == power.at(0, k));
        }
    }
}

TEST_CASE("enumerate_tuples counts distinct elements") {
    auto d = oracle::enumerate_tuples(3, 3);
    CHECK(d.probs[0] == Rational(0));
    CHECK(d.probs[1] == Rational(3, 27));
    CHECK(d.probs[2] == Rational(18, 27));
    CHECK(d.probs[3] == Rational(6, 27));

    for (long t = 1; t <= 6; ++t) {
        auto one = oracle::enumerate_tuples(1, t);
        CHECK(one.probs[1] == Rational(1));
    }

    auto empty = oracle::enumerate_tuples(4, 0);
    CHECK(empty.probs[0] == Rational(1));
}

TEST_CASE("tuple enumeration matches the occupancy chain oracles") {
    for (int n = 1; n <= 5; ++n) {
        auto dense = oracle::to_dense(occupancy::occupancy_process<Rational>(n));
        for (long t = 0; t <= 8; ++t) {
            auto tuples = oracle::enumerate_tuples(n, t);
            auto power = oracle::matrix_power_exact(dense, static_cast<unsigned long>(t));
            for (int k = 0; k <= n; ++k) {
                CHECK(tuples.probs[static_cast<std::size_t>(k)] == power.at(0, k));
            }
        }
    }
}

TEST_CASE("oracles reject oversized instances") {
    std::mt19937_64 gen(8);
    auto proc = random_process(gen, 10);
    CHECK_THROWS_AS(oracle::enumerate_paths(proc, 60, 1000), std::invalid_argument);
    CHECK_THROWS_AS(oracle::enumerate_tuples(10, 30), std::invalid_argument);
}
