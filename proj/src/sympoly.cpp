#include "purebirth/sympoly.hpp"

namespace purebirth {

mpz_class binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class falling_factorial(long n, long k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
    mpz_class r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

mpz_class mpz_pow(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class stirling2(long t, long k) {
    if (t < 0 || k < 0) throw std::invalid_argument("stirling2: negative index");
    std::vector<mpz_class> vars;
    vars.reserve(static_cast<std::size_t>(k) + 1);
    for (long v = 0; v <= k; ++v) vars.emplace_back(v);
    return h_complete<mpz_class>(t - k, vars);
}

mpz_class r_stirling2(long t, long r, long k) {
    if (r < 0) throw std::invalid_argument("r_stirling2: negative r");
    if (k < r) throw std::invalid_argument("r_stirling2: k < r");
    std::vector<mpz_class> vars;
    vars.reserve(static_cast<std::size_t>(k - r) + 1);
    for (long v = r; v <= k; ++v) vars.emplace_back(v);
    return h_complete<mpz_class>(t - k, vars);
}

}  // namespace purebirth
