#include "purebirth/sim.hpp"

#include <cmath>
#include <cstdlib>
#include <thread>

namespace purebirth::sim {

namespace {

// splitmix64 step (Vigna); used only to spread the user seed over the
// xoshiro state and to derive per-worker seeds.
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256++ (Blackman & Vigna, public domain reference sequence)
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::next_open01() {
    for (;;) {
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        if (u > 0.0) return u;
    }
}

std::int64_t geometric_sample(RngStream& rng, double p) {
    if (!(p > 0.0) || p > 1.0) throw std::domain_error("geometric_sample: success probability must be in (0,1]");
    if (p == 1.0) return 1;
    double u = rng.next_open01();
    // ln(1-p) through log1p keeps precision as p approaches 1.
    double g = std::ceil(std::log(u) / std::log1p(-p));
    return g < 1.0 ? 1 : static_cast<std::int64_t>(g);
}

int simulate_state(RngStream& rng, const PureBirthProcess<double>& proc, std::int64_t t) {
    if (t < 0) throw std::invalid_argument("simulate_state: negative time");
    int i = 0;
    while (t > 0 && i < proc.n()) {
        double p = proc.p(i);
        if (p == 0.0) break;  // interior absorbing state, no further births
        t -= geometric_sample(rng, p);
        if (t >= 0) ++i;
    }
    return i;
}

int worker_count_from_env() {
    const char* env = std::getenv("PUREBIRTH_THREADS");
    if (env == nullptr) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    return static_cast<int>(v);
}

MonteCarloResult monte_carlo(const PureBirthProcess<double>& proc, std::int64_t t, std::uint64_t n_samples,
                             std::uint64_t seed, int workers) {
    if (n_samples < 1) throw std::invalid_argument("monte_carlo: need at least one sample");
    if (workers <= 0) workers = worker_count_from_env();
    const std::size_t states = static_cast<std::size_t>(proc.n()) + 1;

    std::uint64_t sm = seed;
    std::vector<std::uint64_t> worker_seeds(static_cast<std::size_t>(workers));
    for (auto& ws : worker_seeds) ws = splitmix64(sm);

    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers),
                                                    std::vector<std::uint64_t>(states, 0));
    auto run_worker = [&](int w) {
        RngStream rng(worker_seeds[static_cast<std::size_t>(w)]);
        std::uint64_t lo = n_samples * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        std::uint64_t hi = n_samples * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
        auto& counts = partial[static_cast<std::size_t>(w)];
        for (std::uint64_t s = lo; s < hi; ++s) {
            ++counts[static_cast<std::size_t>(simulate_state(rng, proc, t))];
        }
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
        for (auto& th : pool) th.join();
    }

    MonteCarloResult res;
    res.sample_count = n_samples;
    res.counts.assign(states, 0);
    for (const auto& counts : partial) {
        for (std::size_t k = 0; k < states; ++k) res.counts[k] += counts[k];
    }
    res.empirical_pmf.resize(states);
    res.standard_errors.resize(states);
    double mean = 0.0;
    for (std::size_t k = 0; k < states; ++k) {
        double phat = static_cast<double>(res.counts[k]) / static_cast<double>(n_samples);
        res.empirical_pmf[k] = phat;
        res.standard_errors[k] = std::sqrt(phat * (1.0 - phat) / static_cast<double>(n_samples));
        mean += static_cast<double>(k) * phat;
    }
    res.empirical_mean = mean;
    return res;
}

}  // namespace purebirth::sim
