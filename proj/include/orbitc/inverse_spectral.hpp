#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbitc/matrix.hpp"
#include "orbitc/weights.hpp"

namespace orbitc {

struct ArrowheadSolution {
    RVec zmods;  // |z_j|, phases fixed to 0
    double x = 0.0;
    CVec z() const { return CVec(zmods.begin(), zmods.end()); }
};

struct RankOneSolution {
    RVec zmods;
    int sign = 1;
    CVec z() const { return CVec(zmods.begin(), zmods.end()); }
};

namespace detail {

inline double clamp_square(double v, double scale, const char* who) {
    if (v >= 0) return v;
    if (v >= -1e-12 * std::max(1.0, scale)) return 0.0;
    throw std::runtime_error(std::string(who) + ": negative squared modulus " + std::to_string(v));
}

inline double magnitude(const RVec& a, const RVec& b) {
    double s = 1.0;
    for (double v : a) s = std::max(s, std::abs(v));
    for (double v : b) s = std::max(s, std::abs(v));
    return s;
}

}  // namespace detail

// Both sides of the sum identity; k is 1-based.
inline std::pair<double, double> sum_identity_sides(const RVec& X, const RVec& Y, std::size_t k) {
    const std::size_t n = X.size();
    if (Y.size() + 1 != n) throw std::invalid_argument("sum_identity_sides: need |Y| = |X| - 1");
    if (k < 1 || k > n) throw std::invalid_argument("sum_identity_sides: index out of range");
    for (std::size_t i = 0; i < Y.size(); ++i)
        for (std::size_t j = i + 1; j < Y.size(); ++j)
            if (Y[i] == Y[j]) throw std::invalid_argument("sum_identity_sides: repeated Y entries");
    double lhs = 0.0;
    for (std::size_t j = 0; j < Y.size(); ++j) {
        double num = 1.0, den = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            if (i != k - 1) num *= X[i] - Y[j];
        for (std::size_t i = 0; i < Y.size(); ++i)
            if (i != j) den *= Y[i] - Y[j];
        lhs += num / den;
    }
    double rhs = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        if (j != k - 1) rhs += X[j];
    for (double y : Y) rhs -= y;
    return {lhs, rhs};
}

// Real-valued core of the arrowhead construction. Entries equal up to exact
// comparison are grouped; inputs are expected to be integral in practice.
inline ArrowheadSolution build_arrowhead(const RVec& mu, const RVec& lambda) {
    const std::size_t m = mu.size();
    if (lambda.size() != m + 1) throw std::invalid_argument("build_arrowhead: rank mismatch");
    for (std::size_t i = 0; i < m; ++i)
        if (!(lambda[i] >= mu[i] && mu[i] >= lambda[i + 1]))
            throw std::invalid_argument("build_arrowhead: lambda does not interlace mu at position " +
                                        std::to_string(i + 1));

    // reduce: each run mu_p = ... = mu_q forces lambda_{p+1..q} to the same value
    RVec mred, lred;
    std::vector<std::size_t> first;  // original index of each reduced mu
    std::vector<char> drop(m + 1, 0);
    for (std::size_t p = 0; p < m;) {
        std::size_t q = p;
        while (q + 1 < m && mu[q + 1] == mu[p]) ++q;
        for (std::size_t i = p + 1; i <= q; ++i) drop[i] = 1;
        mred.push_back(mu[p]);
        first.push_back(p);
        p = q + 1;
    }
    for (std::size_t i = 0; i <= m; ++i)
        if (!drop[i]) lred.push_back(lambda[i]);

    const double scale = detail::magnitude(mu, lambda);
    ArrowheadSolution sol;
    sol.zmods.assign(m, 0.0);
    for (std::size_t j = 0; j < mred.size(); ++j) {
        double num = 1.0, den = 1.0;
        for (double l : lred) num *= l - mred[j];
        for (std::size_t i = 0; i < mred.size(); ++i)
            if (i != j) den *= mred[i] - mred[j];
        const double sq = detail::clamp_square(-num / den, std::pow(scale, static_cast<double>(lred.size())),
                                               "build_arrowhead");
        sol.zmods[first[j]] = std::sqrt(sq);
    }
    double x = 0.0;
    for (double l : lambda) x += l;
    for (double v : mu) x -= v;
    sol.x = x;
    return sol;
}

inline ArrowheadSolution build_arrowhead(const Weight& mu, const Weight& lambda) {
    require_dominant(mu, "build_arrowhead");
    require_dominant(lambda, "build_arrowhead");
    if (!interlaces_down(lambda, mu))
        throw std::invalid_argument("build_arrowhead: " + to_string(lambda) + " does not interlace " + to_string(mu));
    ArrowheadSolution s = build_arrowhead(to_real(mu), to_real(lambda));
    s.x = static_cast<double>(weight_sum(lambda) - weight_sum(mu));
    return s;
}

inline double max_abs_diff(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}

inline double arrowhead_residual(const Weight& mu, const Weight& lambda, const ArrowheadSolution& s) {
    return max_abs_diff(spectrum_skew(arrowhead(mu, s.z(), s.x)), to_real(lambda));
}

namespace detail {

// strict-interlacing rank-one formula on the reduced problem
inline void rank_one_strict(const RVec& lam, const RVec& beta, int sign, RVec& sq) {
    const std::size_t n = lam.size();
    sq.assign(n, 0.0);
    const double scale = std::pow(magnitude(lam, beta), static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        double num = 1.0, den = 1.0;
        for (double b : beta) num *= lam[j] - b;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) den *= lam[j] - lam[i];
        const double v = sign > 0 ? -num / den : num / den;
        sq[j] = clamp_square(v, scale, "build_rank_one");
    }
}

}  // namespace detail

inline bool interlaces_above(const RVec& beta, const RVec& lam, double tol = 0.0) {
    // beta_1 >= lam_1 >= beta_2 >= ... >= beta_n >= lam_n
    const std::size_t n = lam.size();
    if (beta.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (beta[i] < lam[i] - tol) return false;
        if (i + 1 < n && lam[i] < beta[i + 1] - tol) return false;
    }
    return true;
}

// z with spectrum(J_lambda + sign i z z^*) = beta.
inline RankOneSolution build_rank_one(const RVec& lambda, const RVec& beta, int sign) {
    const std::size_t n = lambda.size();
    if (beta.size() != n) throw std::invalid_argument("build_rank_one: rank mismatch");
    if (sign != 1 && sign != -1) throw std::invalid_argument("build_rank_one: sign must be +1 or -1");
    if (sign > 0 ? !interlaces_above(beta, lambda) : !interlaces_above(lambda, beta))
        throw std::invalid_argument(sign > 0 ? "build_rank_one: beta does not interlace above lambda"
                                             : "build_rank_one: beta does not interlace below lambda");

    std::vector<std::size_t> lidx(n), bidx(n);
    for (std::size_t i = 0; i < n; ++i) lidx[i] = bidx[i] = i;

    // eliminate equality cases, smallest index first; z is zero on eliminated lambda slots
    for (;;) {
        const std::size_t m = lidx.size();
        std::size_t drop_l = m, drop_b = m;
        for (std::size_t l = 0; l < m && drop_l == m; ++l) {
            if (beta[bidx[l]] == lambda[lidx[l]]) {
                drop_l = l;
                drop_b = l;
            } else if (sign > 0 && l >= 1 && lambda[lidx[l - 1]] == beta[bidx[l]]) {
                drop_l = l - 1;
                drop_b = l;
            } else if (sign < 0 && l + 1 < m && beta[bidx[l]] == lambda[lidx[l + 1]]) {
                drop_l = l + 1;
                drop_b = l;
            }
        }
        if (drop_l == m) break;
        lidx.erase(lidx.begin() + static_cast<std::ptrdiff_t>(drop_l));
        bidx.erase(bidx.begin() + static_cast<std::ptrdiff_t>(drop_b));
    }

    RVec lr, br, sq;
    for (auto i : lidx) lr.push_back(lambda[i]);
    for (auto i : bidx) br.push_back(beta[i]);
    detail::rank_one_strict(lr, br, sign, sq);

    RankOneSolution s;
    s.sign = sign;
    s.zmods.assign(n, 0.0);
    for (std::size_t k = 0; k < lidx.size(); ++k) s.zmods[lidx[k]] = std::sqrt(sq[k]);
    return s;
}

inline RankOneSolution build_rank_one(const Weight& lambda, const Weight& beta, int sign) {
    require_dominant(lambda, "build_rank_one");
    require_dominant(beta, "build_rank_one");
    if (lambda.size() != beta.size()) throw std::invalid_argument("build_rank_one: rank mismatch");
    if (sign > 0 ? !precsim(lambda, beta) : !precsim(beta, lambda))
        throw std::invalid_argument("build_rank_one: required interlacing fails for " + to_string(lambda) + " and " +
                                    to_string(beta));
    return build_rank_one(to_real(lambda), to_real(beta), sign);
}

inline double rank_one_residual(const Weight& lambda, const Weight& beta, const RankOneSolution& s) {
    return max_abs_diff(spectrum_skew(rank_one_update(lambda, s.z(), static_cast<double>(s.sign))), to_real(beta));
}

struct InterlacingVerdict {
    RVec beta;
    bool ok = false;
};

// Spectrum of J_lambda + (i/alpha) z z^* and whether it interlaces on the side of sign(alpha).
inline InterlacingVerdict update_interlacing_verdict(const Weight& lambda, const CVec& z, double alpha) {
    if (alpha == 0.0) throw std::invalid_argument("update_interlacing_verdict: alpha must be nonzero");
    require_dominant(lambda, "update_interlacing_verdict");
    InterlacingVerdict v;
    v.beta = spectrum_skew(rank_one_update(lambda, z, 1.0 / alpha));
    const RVec lam = to_real(lambda);
    const double tol = 1e-10 * detail::magnitude(lam, v.beta);
    v.ok = alpha > 0 ? interlaces_above(v.beta, lam, tol) : interlaces_above(lam, v.beta, tol);
    return v;
}

}  // namespace orbitc
