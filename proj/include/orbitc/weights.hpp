#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitc/detail/lu.hpp"

namespace orbitc {

// Integer tuples. A dominant weight is a nonincreasing Weight; a torus weight
// has no ordering constraint. Both use the same container.
using Weight = std::vector<std::int64_t>;
using GTPattern = std::vector<Weight>;  // rows[0] has length 1, rows.back() is the top row

inline bool is_dominant(const Weight& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

inline void require_dominant(const Weight& w, const char* what) {
    if (w.empty()) throw std::invalid_argument(std::string(what) + ": empty weight");
    if (!is_dominant(w)) throw std::invalid_argument(std::string(what) + ": weight is not nonincreasing");
}

inline std::string to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

inline std::int64_t weight_sum(const Weight& w) {
    return std::accumulate(w.begin(), w.end(), std::int64_t{0});
}

// lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n
inline bool interlaces_down(const Weight& lambda, const Weight& mu) {
    if (lambda.empty() || mu.size() + 1 != lambda.size())
        throw std::invalid_argument("interlaces_down: rank mismatch");
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1])) return false;
    return true;
}

// mu precsim nu  <=>  nu_1 >= mu_1 >= nu_2 >= mu_2 >= ... >= nu_n >= mu_n.
// Evaluated literally, so it also accepts non-dominant torus weights.
inline bool precsim(const Weight& mu, const Weight& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("precsim: rank mismatch");
    const std::size_t n = mu.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (nu[i] < mu[i]) return false;
        if (i + 1 < n && mu[i] < nu[i + 1]) return false;
    }
    return true;
}

namespace detail {

// Fill out[i] for i >= pos with values in [lo[i], hi[i]] so the total is `target`.
inline void enumerate_boxes(const Weight& lo, const Weight& hi, std::int64_t target, std::size_t pos,
                            Weight& cur, std::vector<Weight>& out) {
    const std::size_t n = lo.size();
    if (pos == n) {
        if (target == 0) out.push_back(cur);
        return;
    }
    std::int64_t rest_lo = 0, rest_hi = 0;
    for (std::size_t i = pos + 1; i < n; ++i) { rest_lo += lo[i]; rest_hi += hi[i]; }
    // only values leaving a reachable remainder
    const std::int64_t top = std::min(hi[pos], target - rest_lo), bot = std::max(lo[pos], target - rest_hi);
    for (std::int64_t v = top; v >= bot; --v) {
        cur[pos] = v;
        enumerate_boxes(lo, hi, target - v, pos + 1, cur, out);
    }
}

}  // namespace detail

// {lambda' : precsim(lambda, lambda'), |lambda'| = |lambda| + m}, lexicographically decreasing.
inline std::vector<Weight> pieri_up(const Weight& lambda, std::int64_t m) {
    require_dominant(lambda, "pieri_up");
    if (m < 0) throw std::invalid_argument("pieri_up: m must be nonnegative");
    const std::size_t n = lambda.size();
    Weight lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = lambda[i];
        hi[i] = i == 0 ? lambda[0] + m : lambda[i - 1];
    }
    std::vector<Weight> out;
    Weight cur(n);
    detail::enumerate_boxes(lo, hi, weight_sum(lambda) + m, 0, cur, out);
    return out;
}

// {lambda' : precsim(lambda', lambda), |lambda'| = |lambda| - m}
inline std::vector<Weight> pieri_down(const Weight& lambda, std::int64_t m) {
    require_dominant(lambda, "pieri_down");
    if (m < 0) throw std::invalid_argument("pieri_down: m must be nonnegative");
    const std::size_t n = lambda.size();
    Weight lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        hi[i] = lambda[i];
        lo[i] = i + 1 < n ? lambda[i + 1] : lambda[n - 1] - m;
    }
    std::vector<Weight> out;
    Weight cur(n);
    detail::enumerate_boxes(lo, hi, weight_sum(lambda) - m, 0, cur, out);
    return out;
}

// rho in pieri_up(lambda, m) (up) or pieri_down(lambda, m), without enumerating.
inline bool pieri_contains(const Weight& lambda, std::int64_t m, const Weight& rho, bool up) {
    require_dominant(lambda, "pieri_contains");
    if (m < 0) throw std::invalid_argument("pieri_contains: m must be nonnegative");
    const std::size_t n = lambda.size();
    if (rho.size() != n) return false;
    if (weight_sum(rho) != weight_sum(lambda) + (up ? m : -m)) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t lo = up ? lambda[i] : (i + 1 < n ? lambda[i + 1] : lambda[n - 1] - m);
        const std::int64_t hi = up ? (i == 0 ? lambda[0] + m : lambda[i - 1]) : lambda[i];
        if (rho[i] < lo || rho[i] > hi) return false;
    }
    return true;
}

// All lambda with interlaces_down(lambda, mu) and lo <= lambda_n, lambda_1 <= hi.
inline std::vector<Weight> interlacing_lifts(const Weight& mu, std::int64_t lo, std::int64_t hi) {
    require_dominant(mu, "interlacing_lifts");
    const std::size_t n = mu.size() + 1;
    std::vector<Weight> out;
    Weight cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) { out.push_back(cur); return; }
        std::int64_t top = i == 0 ? hi : mu[i - 1];
        std::int64_t bot = i + 1 == n ? lo : mu[i];
        for (std::int64_t v = top; v >= bot; --v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

inline void for_each_gt_pattern(const Weight& lambda, const std::function<void(const GTPattern&)>& f) {
    require_dominant(lambda, "gt_patterns");
    const std::size_t n = lambda.size();
    GTPattern rows(n);
    rows[n - 1] = lambda;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t k, std::size_t i) {
        // filling rows[k] (length k+1) entry i, constrained by rows[k+1]
        if (i == k + 1) {
            if (k == 0) f(rows);
            else fill(k - 1, 0);
            return;
        }
        const Weight& up = rows[k + 1];
        for (std::int64_t v = up[i + 1]; v <= up[i]; ++v) {
            rows[k][i] = v;
            fill(k, i + 1);
        }
    };
    if (n == 1) { f(rows); return; }
    for (std::size_t k = 0; k + 1 < n; ++k) rows[k].assign(k + 1, 0);
    fill(n - 2, 0);
}

inline Weight pattern_weight(const GTPattern& p) {
    Weight w(p.size());
    std::int64_t prev = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        std::int64_t s = weight_sum(p[k]);
        w[k] = s - prev;
        prev = s;
    }
    return w;
}

// Multiset of torus weights, one per Gelfand-Tsetlin pattern.
inline std::vector<Weight> gt_weights(const Weight& lambda) {
    std::vector<Weight> out;
    for_each_gt_pattern(lambda, [&](const GTPattern& p) { out.push_back(pattern_weight(p)); });
    return out;
}

inline std::int64_t weyl_dim(const Weight& lambda) {
    require_dominant(lambda, "weyl_dim");
    const std::size_t n = lambda.size();
    // numerator and denominator are both integers; accumulate exactly
    long double num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= static_cast<long double>(lambda[i] - lambda[j] + static_cast<std::int64_t>(j - i));
            den *= static_cast<long double>(j - i);
        }
    return static_cast<std::int64_t>(num / den + 0.5L);
}

inline bool verify_weight_order(const Weight& mu) {
    require_dominant(mu, "verify_weight_order");
    const std::size_t n = mu.size();
    for (const Weight& nu : gt_weights(mu)) {
        if (nu == mu) continue;
        if (precsim(nu, mu)) return false;
        if (std::equal(nu.begin(), nu.begin() + static_cast<std::ptrdiff_t>(n - 1), mu.begin())) return false;
    }
    return true;
}

inline std::complex<double> monomial(const std::vector<std::complex<double>>& x, const Weight& w) {
    std::complex<double> v = 1.0;
    for (std::size_t i = 0; i < w.size(); ++i) v *= std::pow(x[i], static_cast<double>(w[i]));
    return v;
}

// Schur polynomial via the bialternant; falls back to the GT monomial sum when
// coordinates (nearly) coincide.
inline std::complex<double> schur_eval(const Weight& lambda, const std::vector<std::complex<double>>& x,
                                       bool allow_fallback = true) {
    require_dominant(lambda, "schur_eval");
    const std::size_t n = lambda.size();
    if (x.size() != n) throw std::invalid_argument("schur_eval: rank mismatch");
    double sep = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) sep = std::min(sep, std::abs(x[i] - x[j]));
    if (sep < 1e-6) {
        if (!allow_fallback) throw std::domain_error("schur_eval: degenerate bialternant denominator");
        std::complex<double> s = 0.0;
        for (const Weight& w : gt_weights(lambda)) s += monomial(x, w);
        return s;
    }
    using C = std::complex<double>;
    std::vector<C> numer(n * n), denom(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double e = static_cast<double>(n - 1 - j);
            numer[i * n + j] = std::pow(x[i], static_cast<double>(lambda[j]) + e);
            denom[i * n + j] = std::pow(x[i], e);
        }
    return detail::lu_determinant(numer, n) / detail::lu_determinant(denom, n);
}

// complete homogeneous symmetric polynomial h_m(x)
inline std::complex<double> complete_homogeneous(std::int64_t m, const std::vector<std::complex<double>>& x) {
    if (m < 0) return 0.0;
    std::vector<std::complex<double>> h(static_cast<std::size_t>(m) + 1, 0.0);
    h[0] = 1.0;
    for (const auto& xi : x)
        for (std::size_t k = 1; k < h.size(); ++k) h[k] += xi * h[k - 1];
    return h[static_cast<std::size_t>(m)];
}

}  // namespace orbitc
