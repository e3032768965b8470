#pragma once

#include <cmath>
#include <random>

#include "orbitc/matrix.hpp"

namespace orbitc {

using Rng = std::mt19937_64;

inline cplx complex_gaussian(Rng& rng) {
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    const double re = g(rng);
    return {re, g(rng)};
}

inline CVec random_cvec(std::size_t n, Rng& rng, double scale = 1.0) {
    CVec v(n);
    for (auto& x : v) x = scale * complex_gaussian(rng);
    return v;
}

// Haar unitary: Gram-Schmidt QR of a complex Gaussian matrix. Modified
// Gram-Schmidt leaves R with a positive diagonal, which is the phase fix.
inline CMatrix haar_unitary(std::size_t n, Rng& rng) {
    std::vector<CVec> cols(n);
    for (auto& c : cols) c = random_cvec(n, rng);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const cplx p = inner(cols[j], cols[i]);
            for (std::size_t k = 0; k < n; ++k) cols[j][k] -= p * cols[i][k];
        }
        const double nr = norm2(cols[j]);
        for (auto& x : cols[j]) x /= nr;
    }
    CMatrix q(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) q(k, j) = cols[j][k];
    return q;
}

inline CMatrix random_hermitian(std::size_t n, Rng& rng, double scale = 1.0) {
    CMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = scale * complex_gaussian(rng);
    return (g + g.adjoint()) * cplx(0.5);
}

}  // namespace orbitc
