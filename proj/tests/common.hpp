#pragma once

// Random generators for interlacing data, shared by unit and acceptance tests.

#include <algorithm>
#include <random>

#include "orbitc/random.hpp"
#include "orbitc/weights.hpp"

namespace testgen {

using namespace orbitc;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// dominant weight with entries in [lo, hi]; small value pool so repeats are common
inline Weight random_dominant(std::size_t n, Rng& rng, std::int64_t lo = -20, std::int64_t hi = 20) {
    Weight w(n);
    const bool clustered = uniform_int(rng, 0, 2) == 0;
    const std::int64_t c = uniform_int(rng, lo, hi);
    for (auto& v : w) v = clustered ? std::clamp(c + uniform_int(rng, -2, 2), lo, hi) : uniform_int(rng, lo, hi);
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

// mu with lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n
inline Weight random_interlaced_down(const Weight& lambda, Rng& rng) {
    Weight mu(lambda.size() - 1);
    for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = uniform_int(rng, lambda[i + 1], lambda[i]);
    return mu;
}

// beta with precsim(lambda, beta) (sign +) or precsim(beta, lambda) (sign -)
inline Weight random_rank_one_target(const Weight& lambda, int sign, Rng& rng, std::int64_t lo = -20,
                                     std::int64_t hi = 20) {
    const std::size_t n = lambda.size();
    Weight beta(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sign > 0)
            beta[i] = uniform_int(rng, lambda[i], i == 0 ? std::max(hi, lambda[0]) : lambda[i - 1]);
        else
            beta[i] = uniform_int(rng, i + 1 == n ? std::min(lo, lambda[n - 1]) : lambda[i + 1], lambda[i]);
    }
    return beta;
}

inline RVec random_reals(std::size_t n, Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    RVec v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

}  // namespace testgen
