#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "orbitc/orbit_topology.hpp"
#include "orbitc/weights.hpp"

// Dual-space side of the convergence criteria. Conditions are phrased through
// representation data: central character, sub-Laplacian eigenvalues on
// distinguished U(n)-types, and occurrence of U(n)-types in the Pieri /
// branching decompositions. Only the scalar limit machinery is shared with the
// orbit side.

namespace orbitc {

enum class RepMutation { None, DropTypeOccurrence, FlipLaplacianSign };

namespace rep_detail {

// U(n)-types of pi_(lambda,alpha) are the Pieri components of tau_lambda (x) S^m C^n
// (alpha > 0) or of its dual (alpha < 0).
inline bool type_occurs_generic(const Weight& lambda, double alpha, const Weight& rho) {
    const std::int64_t m = weight_sum(rho) - weight_sum(lambda);
    if (alpha > 0) return m >= 0 && pieri_contains(lambda, m, rho, true);
    return m <= 0 && pieri_contains(lambda, -m, rho, false);
}

// restriction of tau_lambda to U(n-1)
inline std::vector<Weight> branching(const Weight& lambda) {
    const std::size_t n = lambda.size();
    std::vector<Weight> out;
    Weight cur(n - 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i + 1 == n) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = lambda[i + 1]; v <= lambda[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// U(n)-types mu with entry s doubled; all of them occur in Ind_{U(n-1)}^{U(n)} rho_mu.
inline Weight doubled(const Weight& mu, std::size_t s) {
    Weight w;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        w.push_back(mu[i]);
        if (i == s) w.push_back(mu[i]);
    }
    return w;
}

}  // namespace rep_detail

inline bool rep_side_limit(const SequenceDescriptor& s, const OrbitParam& target, const LimitOptions& opt = {},
                           RepMutation mutation = RepMutation::None) {
    validate(target);
    const std::size_t n = s.n;
    const double nd = static_cast<double>(n);

    if (s.kind == SeqKind::Character) {  // discrete dual of U(n)
        auto* c = std::get_if<Character>(&target);
        if (!c) return false;
        for (std::int64_t k = s.tail_start(); k <= s.K; ++k)
            if (s.lambda_at(k) != c->lambda) return false;
        return true;
    }

    if (s.kind == SeqKind::Intermediate) {
        // trivial on the center: never tends to pi_(lambda,alpha)
        if (std::holds_alternative<Generic>(target)) return false;
        auto lap = [&s](std::int64_t k) -> std::optional<double> { return -s.r_at(k) * s.r_at(k); };
        if (auto* m = std::get_if<Intermediate>(&target)) {
            if (!tends_to(s, lap, -m->r * m->r, opt)) return false;
            for (std::int64_t k = s.tail_start(); k <= s.K; ++k)
                if (s.mu_at(k) != m->mu) return false;
            return true;
        }
        const Weight& lam = std::get<Character>(target).lambda;
        if (!tends_to(s, lap, 0.0, opt)) return false;
        if (n == 1 || mutation == RepMutation::DropTypeOccurrence) return true;
        const auto br = rep_detail::branching(lam);
        for (std::int64_t k = s.tail_start(); k <= s.K; ++k)
            if (std::find(br.begin(), br.end(), s.mu_at(k)) == br.end()) return false;
        return true;
    }

    // generic sequences
    auto center = [&s](std::int64_t k) -> std::optional<double> { return s.alpha_at(k); };
    if (auto* g = std::get_if<Generic>(&target)) {
        if (!tends_to(s, center, g->alpha, opt)) return false;
        // lowest U(n)-type (m = 0) must be tau_lambda
        for (std::int64_t k = s.tail_start(); k <= s.K; ++k) {
            const Weight lk = s.lambda_at(k);
            const auto low = lk.empty() ? std::vector<Weight>{} : pieri_up(lk, 0);
            if (low.size() != 1 || low.front() != g->lambda) return false;
        }
        return true;
    }
    if (!tends_to(s, center, 0.0, opt)) return false;
    const double sgn = s.alpha_at(s.K) > 0 ? 1.0 : -1.0;
    for (std::int64_t k = s.tail_start(); k <= s.K; ++k)
        if ((s.alpha_at(k) > 0 ? 1.0 : -1.0) != sgn) return false;
    const double flip = mutation == RepMutation::FlipLaplacianSign ? -1.0 : 1.0;

    if (auto* m = std::get_if<Intermediate>(&target)) {
        // every doubled type of Ind rho_mu must occur in pi_(lambda^k, alpha_k)
        if (mutation != RepMutation::DropTypeOccurrence)
            for (std::int64_t k = s.tail_start(); k <= s.K; ++k) {
                const Weight lk = s.lambda_at(k);
                for (std::size_t j = 0; j + 1 < n; ++j)
                    if (!rep_detail::type_occurs_generic(lk, s.alpha_at(k), rep_detail::doubled(m->mu, j)))
                        return false;
            }
        // sub-Laplacian on the distinguished type tends to -r^2
        const double mu_edge = n >= 2 ? static_cast<double>(sgn > 0 ? m->mu.back() : m->mu.front()) : 0.0;
        auto lap = [&](std::int64_t k) -> std::optional<double> {
            auto lk = s.try_lambda(k);
            if (!lk) return std::nullopt;
            const double a = s.alpha_at(k);
            if (sgn > 0) return -a * (nd + 2.0 * mu_edge - 2.0 * static_cast<double>(lk->back()));
            return a * (nd + 2.0 * static_cast<double>(lk->front()) - 2.0 * mu_edge);
        };
        return tends_to(s, lap, flip * -m->r * m->r, opt);
    }

    const Weight& rho = std::get<Character>(target).lambda;
    if (mutation != RepMutation::DropTypeOccurrence)
        for (std::int64_t k = s.tail_start(); k <= s.K; ++k)
            if (!rep_detail::type_occurs_generic(s.lambda_at(k), s.alpha_at(k), rho)) return false;
    // sub-Laplacian on the type rho: -|alpha|(n + 2|m|) with |m| the Pieri degree
    auto lap = [&](std::int64_t k) -> std::optional<double> {
        auto lk = s.try_lambda(k);
        if (!lk) return std::nullopt;
        const double m = std::abs(static_cast<double>(weight_sum(rho)) - static_cast<double>(weight_sum(*lk)));
        return -std::abs(s.alpha_at(k)) * (nd + 2.0 * m);
    };
    return tends_to(s, lap, 0.0, opt);
}

// Orbit-side and dual-side verdicts agree on every target.
inline bool homeomorphism_check(const SequenceDescriptor& s, const std::vector<OrbitParam>& targets,
                                const LimitOptions& opt = {}, RepMutation mutation = RepMutation::None) {
    for (const auto& t : targets)
        if (is_limit_orbit(s, t, opt) != rep_side_limit(s, t, opt, mutation)) return false;
    return true;
}

}  // namespace orbitc
