// Brute-force ground truth, kept independent of the closed forms and
// recurrences it checks: exact dense matrix powers, exhaustive monotone
// path enumeration, and exhaustive tuple enumeration for occupancy.
#pragma once

#include <cstdint>

#include "purebirth/matrix.hpp"
#include "purebirth/pbp.hpp"

namespace purebirth::oracle {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Dense transition matrix of the process, exact.
Matrix<Rational> to_dense(const PureBirthProcess<Rational>& proc);

// Exact P^t by binary exponentiation with full dense multiplies.
Matrix<Rational> matrix_power_exact(const Matrix<Rational>& m, unsigned long t);

// Sums path probabilities over every monotone lattice path of length t
// starting in state 0. Throws when the path count exceeds the cap.
StateDistribution<Rational> enumerate_paths(const PureBirthProcess<Rational>& proc, long t,
                                            std::uint64_t cap = kDefaultEnumerationCap);

// Counts tuples in [n]^t by their number of distinct elements; returns
// counts / n^t. Throws when n^t exceeds the cap.
StateDistribution<Rational> enumerate_tuples(int n, long t, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace purebirth::oracle
