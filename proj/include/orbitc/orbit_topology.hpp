#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "orbitc/coadjoint.hpp"
#include "orbitc/inverse_spectral.hpp"
#include "orbitc/matrix.hpp"
#include "orbitc/weights.hpp"

namespace orbitc {

// ---------------------------------------------------------------------------
// Sequence descriptors

// Real sequence, indexed from k = 1. Closed-form kinds are limit + c*g(k).
struct ScalarRule {
    enum class Kind { Explicit, Constant, Harmonic, Power, Geometric };
    Kind kind = Kind::Constant;
    std::vector<double> values;  // Explicit
    double c = 0.0;
    double p = 1.0;  // Power exponent
    double q = 0.5;  // Geometric ratio, |q| < 1
    double limit = 0.0;

    static ScalarRule explicit_list(std::vector<double> v) {
        ScalarRule r;
        r.kind = Kind::Explicit;
        r.values = std::move(v);
        return r;
    }
    static ScalarRule constant(double c) {
        ScalarRule r;
        r.kind = Kind::Constant;
        r.c = c;
        r.limit = c;
        return r;
    }
    static ScalarRule harmonic(double c, double limit = 0.0) {
        ScalarRule r;
        r.kind = Kind::Harmonic;
        r.c = c;
        r.limit = limit;
        return r;
    }
    static ScalarRule power(double c, double p, double limit = 0.0) {
        ScalarRule r;
        r.kind = Kind::Power;
        r.c = c;
        r.p = p;
        r.limit = limit;
        return r;
    }
    static ScalarRule geometric(double c, double q, double limit = 0.0) {
        ScalarRule r;
        r.kind = Kind::Geometric;
        r.c = c;
        r.q = q;
        r.limit = limit;
        return r;
    }

    bool is_explicit() const { return kind == Kind::Explicit; }

    void validate(const char* what) const {
        if (kind == Kind::Explicit && values.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
        if (kind == Kind::Geometric && !(std::abs(q) < 1.0))
            throw std::invalid_argument(std::string(what) + ": geometric ratio must satisfy |q| < 1");
        if (kind == Kind::Power && !(p > 0.0)) throw std::invalid_argument(std::string(what) + ": power must be positive");
    }

    double at(std::int64_t k) const {
        const double kd = static_cast<double>(k);
        switch (kind) {
            case Kind::Explicit:
                if (k < 1 || static_cast<std::size_t>(k) > values.size())
                    throw std::out_of_range("explicit sequence has no sample " + std::to_string(k));
                return values[static_cast<std::size_t>(k - 1)];
            case Kind::Constant: return c;
            case Kind::Harmonic: return limit + c / kd;
            case Kind::Power: return limit + c / std::pow(kd, p);
            case Kind::Geometric: return limit + c * std::pow(q, kd);
        }
        return 0.0;
    }
};

// The one varying entry of lambda^k.
struct TailRule {
    enum class Kind { Explicit, Constant, Linear, Linked };
    Kind kind = Kind::Constant;
    std::vector<std::int64_t> values;  // Explicit
    std::int64_t a = 0, b = 0;          // Constant uses a; Linear is a + b k
    double c = 0.0;                     // Linked: round(c / alpha_k)

    bool is_explicit() const { return kind == Kind::Explicit; }
};

enum class SeqKind { Generic, Intermediate, Character };

inline const char* kind_name(SeqKind k) {
    switch (k) {
        case SeqKind::Generic: return "generic";
        case SeqKind::Intermediate: return "intermediate";
        case SeqKind::Character: return "character";
    }
    return "?";
}

struct SequenceDescriptor {
    SeqKind kind = SeqKind::Generic;
    std::size_t n = 2;
    std::int64_t K = 10000;

    // generic: lambda^k = head with the tail entry appended (or prepended when varying_first)
    ScalarRule alpha = ScalarRule::constant(1.0);
    Weight head;
    TailRule tail;
    bool varying_first = false;

    // intermediate
    Weight mu;
    ScalarRule r = ScalarRule::constant(1.0);

    // character
    Weight lambda;

    // explicit early samples (lambda^k, or mu^k for intermediate), k = 1..prefix.size()
    std::vector<Weight> prefix;

    bool rule_generated() const {
        switch (kind) {
            case SeqKind::Generic: return !alpha.is_explicit() && !tail.is_explicit();
            case SeqKind::Intermediate: return !r.is_explicit();
            case SeqKind::Character: return true;
        }
        return true;
    }

    double alpha_at(std::int64_t k) const { return alpha.at(k); }
    double r_at(std::int64_t k) const { return r.at(k); }

    // nullopt when the entry leaves the exactly representable integer range
    std::optional<Weight> try_lambda(std::int64_t k) const {
        if (kind == SeqKind::Character) {
            if (k >= 1 && static_cast<std::size_t>(k) <= prefix.size()) return prefix[static_cast<std::size_t>(k - 1)];
            return lambda;
        }
        if (kind != SeqKind::Generic) throw std::logic_error("lambda_at: intermediate sequence has no lambda");
        if (k >= 1 && static_cast<std::size_t>(k) <= prefix.size()) return prefix[static_cast<std::size_t>(k - 1)];
        constexpr double big = 9007199254740992.0;  // 2^53
        double v = 0;
        switch (tail.kind) {
            case TailRule::Kind::Explicit:
                if (static_cast<std::size_t>(k) > tail.values.size())
                    throw std::out_of_range("explicit tail has no sample " + std::to_string(k));
                v = static_cast<double>(tail.values[static_cast<std::size_t>(k - 1)]);
                break;
            case TailRule::Kind::Constant: v = static_cast<double>(tail.a); break;
            case TailRule::Kind::Linear:
                v = static_cast<double>(tail.a) + static_cast<double>(tail.b) * static_cast<double>(k);
                break;
            case TailRule::Kind::Linked: v = std::round(tail.c / alpha_at(k)); break;
        }
        if (!std::isfinite(v) || std::abs(v) > big) return std::nullopt;
        Weight w;
        const auto t = static_cast<std::int64_t>(v);
        if (varying_first) w.push_back(t);
        w.insert(w.end(), head.begin(), head.end());
        if (!varying_first) w.push_back(t);
        return w;
    }

    Weight lambda_at(std::int64_t k) const {
        auto w = try_lambda(k);
        if (!w) throw std::range_error("lambda^k leaves the integer range at k = " + std::to_string(k));
        return *w;
    }

    Weight mu_at(std::int64_t k) const {
        if (kind != SeqKind::Intermediate) throw std::logic_error("mu_at: not an intermediate sequence");
        if (k >= 1 && static_cast<std::size_t>(k) <= prefix.size()) return prefix[static_cast<std::size_t>(k - 1)];
        return mu;
    }

    // first index of the "for k large enough" window
    std::int64_t tail_start() const { return K - (K + 3) / 4 + 1; }

    void validate() const {
        if (n < 1) throw std::invalid_argument("descriptor: rank must be positive");
        if (K < 4) throw std::invalid_argument("descriptor: K must be at least 4");
        for (const auto& w : prefix)
            if (w.size() != (kind == SeqKind::Intermediate ? n - 1 : n))
                throw std::invalid_argument("descriptor: prefix weight has the wrong rank");
        switch (kind) {
            case SeqKind::Generic:
                alpha.validate("alpha");
                if (head.size() + 1 != n) throw std::invalid_argument("descriptor: head must have n-1 entries");
                if (alpha.is_explicit() && alpha.values.size() < static_cast<std::size_t>(K))
                    throw std::invalid_argument("descriptor: explicit alpha list shorter than K");
                if (tail.is_explicit() && tail.values.size() < static_cast<std::size_t>(K))
                    throw std::invalid_argument("descriptor: explicit tail list shorter than K");
                for (std::int64_t k = 1; k <= K; ++k) {
                    const double a = alpha_at(k);
                    if (a == 0.0 || !std::isfinite(a))
                        throw std::invalid_argument("descriptor: alpha_k is zero at k = " + std::to_string(k));
                    auto w = try_lambda(k);
                    if (!w) throw std::invalid_argument("descriptor: lambda^k overflows at k = " + std::to_string(k));
                    if (!is_dominant(*w))
                        throw std::invalid_argument("descriptor: lambda^k not dominant at k = " + std::to_string(k) +
                                                    ": " + to_string(*w));
                }
                break;
            case SeqKind::Intermediate:
                r.validate("r");
                if (mu.size() + 1 != n) throw std::invalid_argument("descriptor: mu must have n-1 entries");
                if (n > 1) require_dominant(mu, "descriptor mu");
                if (r.is_explicit() && r.values.size() < static_cast<std::size_t>(K))
                    throw std::invalid_argument("descriptor: explicit r list shorter than K");
                for (std::int64_t k = 1; k <= K; ++k) {
                    if (!(r_at(k) > 0.0)) throw std::invalid_argument("descriptor: r_k must be positive");
                    if (n > 1 && !is_dominant(mu_at(k))) throw std::invalid_argument("descriptor: mu^k not dominant");
                }
                break;
            case SeqKind::Character:
                if (lambda.size() != n) throw std::invalid_argument("descriptor: lambda must have n entries");
                require_dominant(lambda, "descriptor lambda");
                for (const auto& w : prefix) require_dominant(w, "descriptor prefix");
                break;
        }
    }
};

struct LimitOptions {
    double explicit_tol = 1e-6;  // relative, for explicit lists
};

inline double tol_limit(double L) { return 1e-6 * (1.0 + std::abs(L)); }

namespace detail {

// Probe a rule-generated descriptor at k = K, 10K, ... up to 1e12 through its
// closed forms. Outer nullopt: fewer than three probes were representable.
// Inner nullopt: the probes do not settle.
inline std::optional<std::optional<double>> probe_limit(
    const SequenceDescriptor& s, const std::function<std::optional<double>(std::int64_t)>& g) {
    std::vector<double> probes;
    for (double k = static_cast<double>(s.K); k <= 1e12; k *= 10) {
        auto v = g(static_cast<std::int64_t>(k));
        if (!v || !std::isfinite(*v)) break;
        probes.push_back(*v);
    }
    if (probes.size() < 3) return std::nullopt;
    const double L = probes.back();
    for (std::size_t i = probes.size() - 3; i < probes.size(); ++i)
        if (std::abs(probes[i] - L) > tol_limit(L)) return std::optional<double>{};
    return std::optional<double>{L};
}

}  // namespace detail

// Limit of k -> g(k). Rule-generated descriptors are probed far out through
// their closed forms; explicit lists use the final window of samples.
// g returns nullopt where it cannot be evaluated exactly.
inline std::optional<double> detect_limit(const SequenceDescriptor& s,
                                          const std::function<std::optional<double>(std::int64_t)>& g,
                                          const LimitOptions& opt = {}) {
    if (s.rule_generated())
        if (auto p = detail::probe_limit(s, g)) return *p;
    auto last = g(s.K);
    if (!last) return std::nullopt;
    const double L = *last;
    for (std::int64_t k = s.tail_start(); k <= s.K; ++k) {
        auto v = g(k);
        if (!v || std::abs(*v - L) > opt.explicit_tol * (1.0 + std::abs(L))) return std::nullopt;
    }
    return L;
}

inline bool tends_to(const SequenceDescriptor& s, const std::function<std::optional<double>(std::int64_t)>& g,
                     double target, const LimitOptions& opt = {}) {
    if (s.rule_generated())
        if (auto p = detail::probe_limit(s, g)) return *p && std::abs(**p - target) <= tol_limit(target);
    for (std::int64_t k = s.tail_start(); k <= s.K; ++k) {
        auto v = g(k);
        if (!v || std::abs(*v - target) > opt.explicit_tol * (1.0 + std::abs(target))) return false;
    }
    return true;
}

inline bool eventually(const SequenceDescriptor& s, const std::function<bool(std::int64_t)>& pred) {
    for (std::int64_t k = s.tail_start(); k <= s.K; ++k)
        if (!pred(k)) return false;
    return true;
}

namespace detail {

// the standard scalar probes of a generic sequence
inline std::function<std::optional<double>(std::int64_t)> alpha_fn(const SequenceDescriptor& s) {
    return [&s](std::int64_t k) -> std::optional<double> { return s.alpha_at(k); };
}
inline std::function<std::optional<double>(std::int64_t)> alpha_times_entry(const SequenceDescriptor& s, bool last) {
    return [&s, last](std::int64_t k) -> std::optional<double> {
        auto w = s.try_lambda(k);
        if (!w) return std::nullopt;
        const double e = static_cast<double>(last ? w->back() : w->front());
        return s.alpha_at(k) * e;
    };
}
inline std::function<std::optional<double>(std::int64_t)> r_fn(const SequenceDescriptor& s) {
    return [&s](std::int64_t k) -> std::optional<double> { return s.r_at(k); };
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Orbit-side convergence conditions

inline bool is_limit_orbit(const SequenceDescriptor& s, const OrbitParam& target, const LimitOptions& opt = {}) {
    validate(target);
    if (rank_of(target) != s.n) throw std::invalid_argument("is_limit_orbit: rank mismatch");
    const std::size_t n = s.n;

    switch (s.kind) {
        case SeqKind::Generic: {
            if (auto* g = std::get_if<Generic>(&target)) {  // case 1
                return tends_to(s, detail::alpha_fn(s), g->alpha, opt) &&
                       eventually(s, [&](std::int64_t k) { return s.lambda_at(k) == g->lambda; });
            }
            if (!tends_to(s, detail::alpha_fn(s), 0.0, opt)) return false;
            const bool pos = eventually(s, [&](std::int64_t k) { return s.alpha_at(k) > 0; });
            const bool neg = eventually(s, [&](std::int64_t k) { return s.alpha_at(k) < 0; });
            if (auto* m = std::get_if<Intermediate>(&target)) {  // case 2
                const double want = -m->r * m->r / 2.0;
                if (pos) {
                    return eventually(s,
                                      [&](std::int64_t k) {
                                          const Weight w = s.lambda_at(k);
                                          return std::equal(m->mu.begin(), m->mu.end(), w.begin());
                                      }) &&
                           tends_to(s, detail::alpha_times_entry(s, true), want, opt);
                }
                if (neg) {
                    return eventually(s,
                                      [&](std::int64_t k) {
                                          const Weight w = s.lambda_at(k);
                                          return std::equal(m->mu.begin(), m->mu.end(), w.begin() + 1);
                                      }) &&
                           tends_to(s, detail::alpha_times_entry(s, false), want, opt);
                }
                return false;
            }
            const Weight& lam = std::get<Character>(target).lambda;  // case 3
            if (pos)
                return eventually(s, [&](std::int64_t k) { return precsim(s.lambda_at(k), lam); }) &&
                       tends_to(s, detail::alpha_times_entry(s, true), 0.0, opt);
            if (neg)
                return eventually(s, [&](std::int64_t k) { return precsim(lam, s.lambda_at(k)); }) &&
                       tends_to(s, detail::alpha_times_entry(s, false), 0.0, opt);
            return false;
        }
        case SeqKind::Intermediate: {
            if (std::holds_alternative<Generic>(target)) return false;
            if (auto* m = std::get_if<Intermediate>(&target)) {  // case 4
                return tends_to(s, detail::r_fn(s), m->r, opt) &&
                       eventually(s, [&](std::int64_t k) { return s.mu_at(k) == m->mu; });
            }
            const Weight& lam = std::get<Character>(target).lambda;  // case 5
            if (n == 1) return tends_to(s, detail::r_fn(s), 0.0, opt);
            return tends_to(s, detail::r_fn(s), 0.0, opt) &&
                   eventually(s, [&](std::int64_t k) { return interlaces_down(lam, s.mu_at(k)); });
        }
        case SeqKind::Character: {  // case 6
            auto* c = std::get_if<Character>(&target);
            return c && eventually(s, [&](std::int64_t k) { return s.lambda_at(k) == c->lambda; });
        }
    }
    return false;
}

inline double round_to(double v, double step) { return std::round(v / step) * step; }

inline std::vector<Weight> dominant_weights_in_box(std::size_t n, std::int64_t bound) {
    std::vector<Weight> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    Weight cur(n);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t top) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = top; v >= -bound; --v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, bound);
    return out;
}

// All targets with weight entries in [-bound, bound] that are limits of s.
// Continuous parameters come from the detected scalar limits.
inline std::vector<OrbitParam> enumerate_limit_orbits(const SequenceDescriptor& s, std::int64_t bound,
                                                      const LimitOptions& opt = {}) {
    if (bound < 0) throw std::invalid_argument("enumerate_limit_orbits: bound must be nonnegative");
    s.validate();
    std::vector<OrbitParam> cand;
    const std::size_t n = s.n;
    if (s.kind == SeqKind::Generic) {
        auto a = detect_limit(s, detail::alpha_fn(s), opt);
        if (a && std::abs(*a) > tol_limit(0.0)) {
            const double alpha = round_to(*a, 1e-9);
            for (auto& w : dominant_weights_in_box(n, bound)) cand.push_back(Generic{w, alpha});
        } else if (a) {
            const bool pos = s.alpha_at(s.K) > 0;
            auto L = detect_limit(s, detail::alpha_times_entry(s, pos), opt);
            if (L && *L < -tol_limit(0.0)) {
                const double r = round_to(std::sqrt(-2.0 * *L), 1e-9);
                for (auto& w : dominant_weights_in_box(n - 1, bound)) cand.push_back(Intermediate{w, r});
            }
            for (auto& w : dominant_weights_in_box(n, bound)) cand.push_back(Character{w});
        }
    } else if (s.kind == SeqKind::Intermediate) {
        auto L = detect_limit(s, detail::r_fn(s), opt);
        if (L && *L > tol_limit(0.0)) {
            const double r = round_to(*L, 1e-9);
            for (auto& w : dominant_weights_in_box(n - 1, bound)) cand.push_back(Intermediate{w, r});
        }
        for (auto& w : dominant_weights_in_box(n, bound)) cand.push_back(Character{w});
    } else {
        for (auto& w : dominant_weights_in_box(n, bound)) cand.push_back(Character{w});
    }
    std::vector<OrbitParam> out;
    for (auto& t : cand)
        if (is_limit_orbit(s, t, opt)) out.push_back(t);
    return out;
}

// ---------------------------------------------------------------------------
// Witness sequences

struct Witness {
    CMatrix A;
    CVec z;     // generic sequences
    CMatrix w;  // intermediate sequences (element of W)
};

namespace detail {

inline CMatrix cyclic_shift_down(std::size_t n) {  // e_1 -> e_n, e_j -> e_{j-1}
    CMatrix a(n);
    a(n - 1, 0) = 1.0;
    for (std::size_t j = 1; j < n; ++j) a(j - 1, j) = 1.0;
    return a;
}

// A with A M A^* = i diag(eigenvalues), M skew-Hermitian
inline CMatrix diagonalizer(const CMatrix& m) {
    return eig_hermitian(m * cplx(0.0, -1.0), true).vectors.adjoint();
}

// Witness by the construction matching the target's case. Falls back to
// (I, 0) where the construction's hypotheses fail at this k.
inline Witness shaped_witness(const SequenceDescriptor& s, const OrbitParam& target, std::int64_t k) {
    const std::size_t n = s.n;
    Witness wt{CMatrix::identity(n), CVec(n, 0.0), CMatrix(n)};
    if (s.kind == SeqKind::Generic) {
        const Weight lam = s.lambda_at(k);
        const double a = s.alpha_at(k);
        if (std::holds_alternative<Intermediate>(target)) {
            if (a > 0) {
                wt.z[n - 1] = std::sqrt(std::max(0.0, -a * static_cast<double>(lam[n - 1])));
            } else {
                wt.z[0] = std::sqrt(std::max(0.0, -a * static_cast<double>(lam[0])));
                wt.A = cyclic_shift_down(n);
            }
        } else if (auto* c = std::get_if<Character>(&target)) {
            const int sign = a > 0 ? 1 : -1;
            const bool ok = sign > 0 ? precsim(lam, c->lambda) : precsim(c->lambda, lam);
            if (ok) {
                const RankOneSolution sol = build_rank_one(lam, c->lambda, sign);
                const double sc = std::sqrt(std::abs(a));
                for (std::size_t i = 0; i < n; ++i) wt.z[i] = sol.zmods[i] * sc;
                wt.A = diagonalizer(rank_one_update(lam, sol.z(), static_cast<double>(sign)));
            }
        }
    } else if (s.kind == SeqKind::Intermediate) {
        if (auto* c = std::get_if<Character>(&target)) {
            const Weight mu = s.mu_at(k);
            if (n > 1 && interlaces_down(c->lambda, mu)) {
                const ArrowheadSolution sol = build_arrowhead(mu, c->lambda);
                const CMatrix full = arrowhead(mu, sol.z(), sol.x);
                wt.w = full - j_diag_embedded(mu);
                wt.A = diagonalizer(full);
            }
        }
    }
    return wt;
}

}  // namespace detail

inline Functional witness_functional(const SequenceDescriptor& s, std::int64_t k, const Witness& w) {
    switch (s.kind) {
        case SeqKind::Generic: return orbit_point_generic(s.lambda_at(k), s.alpha_at(k), w.A, w.z);
        case SeqKind::Intermediate: return orbit_point_intermediate(s.mu_at(k), s.r_at(k), w.A, w.w);
        case SeqKind::Character: return base_functional(Character{s.lambda_at(k)});
    }
    throw std::logic_error("witness_functional: bad kind");
}

inline Witness witness_points(const SequenceDescriptor& s, const OrbitParam& target, std::int64_t k,
                              const LimitOptions& opt = {}) {
    if (!is_limit_orbit(s, target, opt)) throw std::invalid_argument("witness_points: target is not a limit");
    return detail::shaped_witness(s, target, k);
}

// Lower bound on inf over the k-th orbit of the distance to the target base
// point, from orbit invariants: the x slot, the spectrum of x U/i - u u^*/2
// (generic), |u| = r (intermediate), and |u|^2 = 2|x| |tr(U/i) - sum lambda|.
inline double orbit_distance_lower_bound(const SequenceDescriptor& s, std::int64_t k, const OrbitParam& target) {
    const Functional t = base_functional(target);
    const std::size_t n = s.n;
    const RVec ts = spectrum_skew(t.U);
    const double ut = norm2(t.u);
    double tr_t = 0;
    for (double v : ts) tr_t += v;

    auto box_dist = [&](const RVec& lo, const RVec& hi) {
        double s2 = 0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double d = ts[i] < lo[i] ? lo[i] - ts[i] : (ts[i] > hi[i] ? ts[i] - hi[i] : 0.0);
            s2 += d * d;
        }
        return std::sqrt(s2);
    };
    // smallest d >= 0 with pred(d), pred monotone
    auto threshold = [](const std::function<bool(double)>& pred) {
        if (pred(0.0)) return 0.0;
        double hi = 1.0;
        while (!pred(hi)) hi *= 2.0;
        double lo = 0.0;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (pred(mid) ? hi : lo) = mid;
        }
        return lo;
    };
    constexpr double inf = 1e300;

    if (s.kind == SeqKind::Generic) {
        const Weight lam = s.lambda_at(k);
        const double a = s.alpha_at(k);
        const RVec l = to_real(lam);
        double sum_l = 0;
        for (double v : l) sum_l += v;
        // spectrum of U/i interlaces lambda on the side of sign(a)
        RVec lo(n), hi(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a > 0) {
                lo[i] = l[i];
                hi[i] = i == 0 ? inf : l[i - 1];
            } else {
                hi[i] = l[i];
                lo[i] = i + 1 == n ? -inf : l[i + 1];
            }
        }
        const double b_spec = box_dist(lo, hi);
        const double b_x = std::abs(a - t.x);
        double best = std::sqrt(b_spec * b_spec + b_x * b_x);
        // x U/i - u u^*/2 has spectrum a*lambda
        CMatrix mt = t.U * cplx(0.0, -a) - outer(t.u, t.u) * cplx(0.5);
        RVec ms = eig_hermitian(mt, false).values;
        RVec al(n);
        for (std::size_t i = 0; i < n; ++i) al[i] = a * l[i];
        std::sort(al.begin(), al.end(), std::greater<>());
        double hw = 0;
        for (std::size_t i = 0; i < n; ++i) hw += (al[i] - ms[i]) * (al[i] - ms[i]);
        hw = std::sqrt(hw);
        const double bq = std::abs(a) + ut;
        best = std::max(best, -bq + std::sqrt(bq * bq + 2.0 * hw));
        // trace coupling
        const double gap = std::abs(tr_t - sum_l), rt = std::sqrt(static_cast<double>(n));
        best = std::max(best, threshold([&](double d) {
                            const double lhs = std::max(0.0, ut - d);
                            return lhs * lhs <= 2.0 * std::abs(a) * (gap + rt * d);
                        }));
        best = std::max(best, threshold([&](double d) {
                            return 2.0 * std::abs(a) * std::max(0.0, gap - rt * d) <= (ut + d) * (ut + d);
                        }));
        return best;
    }
    if (s.kind == SeqKind::Intermediate) {
        const RVec m = to_real(s.mu_at(k));
        RVec lo(n), hi(n);
        for (std::size_t i = 0; i < n; ++i) {
            hi[i] = i == 0 ? inf : m[i - 1];
            lo[i] = i + 1 == n ? -inf : m[i];
        }
        const double b_spec = box_dist(lo, hi);
        const double b_u = std::abs(s.r_at(k) - ut);
        return std::sqrt(b_spec * b_spec + b_u * b_u + t.x * t.x);
    }
    const RVec l = to_real(s.lambda_at(k));
    double hw = 0;
    for (std::size_t i = 0; i < n; ++i) hw += (l[i] - ts[i]) * (l[i] - ts[i]);
    return std::sqrt(hw + ut * ut + t.x * t.x);
}

struct LimitReport {
    OrbitParam target;
    std::vector<double> distances;  // distances[k-1]
    bool converged = false;
    bool probe = false;  // target is not a limit; distances come from same-shape probe points
    std::string diagnostic;
};

inline LimitReport verify_convergence(const SequenceDescriptor& s, const OrbitParam& target, double tol,
                                      const LimitOptions& opt = {}) {
    s.validate();
    LimitReport rep{target, {}, false, false, ""};
    rep.probe = !is_limit_orbit(s, target, opt);
    if (rep.probe) rep.diagnostic = "target is not a limit of the sequence; distances use probe points";
    const Functional base = base_functional(target);
    rep.distances.reserve(static_cast<std::size_t>(s.K));
    try {
        for (std::int64_t k = 1; k <= s.K; ++k) {
            const Witness w = detail::shaped_witness(s, target, k);
            rep.distances.push_back(functional_distance(witness_functional(s, k, w), base));
        }
    } catch (const std::exception& e) {
        rep.diagnostic = std::string("witness generation failed: ") + e.what();
        return rep;
    }
    rep.converged = !rep.distances.empty() && rep.distances.back() < tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Scalar invariants

inline double center_invariant(const SequenceDescriptor& s, std::int64_t k) {
    if (s.kind != SeqKind::Generic) return 0.0;  // trivial on the center
    return s.alpha_at(k);
}

// Sub-Laplacian value on the distinguished U(n)-type.
inline double spectral_invariant_sublaplacian(const SequenceDescriptor& s, std::int64_t k) {
    if (s.kind != SeqKind::Generic) throw std::invalid_argument("spectral_invariant_sublaplacian: wrong branch");
    const Weight lam = s.lambda_at(k);
    const double a = s.alpha_at(k);
    const double n = static_cast<double>(s.n);
    const std::size_t nn = lam.size();
    if (a > 0) {
        const double mu_last = nn >= 2 ? static_cast<double>(lam[nn - 2]) : 0.0;
        return -a * (n + 2.0 * mu_last - 2.0 * static_cast<double>(lam[nn - 1]));
    }
    const double mu_first = nn >= 2 ? static_cast<double>(lam[1]) : 0.0;
    return a * (n + 2.0 * static_cast<double>(lam[0]) - 2.0 * mu_first);
}

}  // namespace orbitc
