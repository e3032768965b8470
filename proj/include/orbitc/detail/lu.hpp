#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace orbitc::detail {

// Determinant of a dense n x n matrix stored row-major, partial pivoting.
template <class T>
T lu_determinant(std::vector<T> a, std::size_t n) {
    T det = T(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double v = std::abs(a[r * n + col]);
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0) return T(0);
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
            det = -det;
        }
        const T d = a[col * n + col];
        det *= d;
        for (std::size_t r = col + 1; r < n; ++r) {
            const T f = a[r * n + col] / d;
            if (f == T(0)) continue;
            for (std::size_t c = col + 1; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
        }
    }
    return det;
}

}  // namespace orbitc::detail
