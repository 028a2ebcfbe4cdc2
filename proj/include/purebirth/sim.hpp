// Simulation by geometric waiting times, plus a deterministic Monte Carlo
// harness. The generator is xoshiro256++ seeded through splitmix64, fixed
// bit-exactly so identical seeds reproduce identical samples everywhere.
#pragma once

#include <cstdint>
#include <vector>

#include "purebirth/pbp.hpp"

namespace purebirth::sim {

class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on the open interval (0,1); zero outputs are redrawn.
    double next_open01();

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t s_[4];
};

// Geometric sample ceil(ln(U)/ln(1-p)) with support {1,2,...}; p = 1 short-
// circuits to 1 without touching the logarithm.
std::int64_t geometric_sample(RngStream& rng, double p);

// Algorithm: accumulate geometric waiting times, advancing the state while
// simulated time remains. Draws at most min(n, t) uniforms.
int simulate_state(RngStream& rng, const PureBirthProcess<double>& proc, std::int64_t t);

struct MonteCarloResult {
    std::uint64_t sample_count = 0;
    std::vector<std::uint64_t> counts;        // per state 0..n
    std::vector<double> empirical_pmf;        // counts / N
    std::vector<double> standard_errors;      // sqrt(phat(1-phat)/N) per state
    double empirical_mean = 0.0;
};

// N independent runs. Worker w consumes its own stream derived from the
// master seed, so results depend only on (seed, N, worker count); counts
// are summed, making the merge order-independent. Worker count defaults to
// 1 and is capped by the PUREBIRTH_THREADS environment variable.
MonteCarloResult monte_carlo(const PureBirthProcess<double>& proc, std::int64_t t, std::uint64_t n_samples,
                             std::uint64_t seed, int workers = 0);

int worker_count_from_env();

}  // namespace purebirth::sim
