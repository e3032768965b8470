#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace orbitc::detail {

struct Rule {
    std::vector<double> x, w;
};

// Gauss-Legendre nodes on [a, b] by Newton iteration on P_n.
inline Rule gauss_legendre(int n, double a = -1.0, double b = 1.0) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = mid - half * x;
        r.x[n - 1 - i] = mid + half * x;
        r.w[i] = r.w[n - 1 - i] = half * w;
    }
    return r;
}

// Periodic trapezoid on [0, 2 pi).
inline Rule periodic_trapezoid(int m) {
    if (m < 1) throw std::invalid_argument("periodic_trapezoid: need at least one node");
    Rule r;
    const double h = 2.0 * std::numbers::pi / m;
    for (int j = 0; j < m; ++j) {
        r.x.push_back(j * h);
        r.w.push_back(h);
    }
    return r;
}

}  // namespace orbitc::detail
