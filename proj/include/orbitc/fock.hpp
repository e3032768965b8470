#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "orbitc/detail/quadrature.hpp"
#include "orbitc/matrix.hpp"

namespace orbitc {

using MultiIndex = std::vector<int>;

inline int total(const MultiIndex& q) {
    int s = 0;
    for (int v : q) {
        if (v < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
        s += v;
    }
    return s;
}

inline double factorial(int k) { return std::tgamma(k + 1.0); }

inline double multi_factorial(const MultiIndex& q) {
    double f = 1.0;
    for (int v : q) f *= factorial(v);
    return f;
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// number of multi-indices of length n and total N
inline std::uint64_t dim_homog(int N, int n) {
    if (N < 0 || n < 1) throw std::invalid_argument("dim_homog: need N >= 0, n >= 1");
    std::uint64_t b = 1;
    for (int i = 1; i <= n - 1; ++i) b = b * static_cast<std::uint64_t>(N + i) / static_cast<std::uint64_t>(i);
    return b;
}

// all multi-indices of length n and total N, lexicographically decreasing
inline std::vector<MultiIndex> compositions(int N, int n) {
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == n - 1) {
            cur[static_cast<std::size_t>(i)] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[static_cast<std::size_t>(i)] = v;
            rec(i + 1, rem - v);
        }
    };
    if (n >= 1) rec(0, N);
    return out;
}

// sum_j C(q,j) (-x)^j / j!  (the Laguerre polynomial L_q), literal sum
inline double laguerre_sum(int q, double x) {
    double s = 0.0, term = 1.0;  // term_j = C(q,j)(-x)^j/j!
    for (int j = 0; j <= q; ++j) {
        s += term;
        term *= -x * (q - j) / ((j + 1.0) * (j + 1.0));
    }
    return s;
}

// L_0..L_N at x by the three-term recurrence
inline std::vector<double> laguerre_table(int N, double x) {
    std::vector<double> L(static_cast<std::size_t>(N) + 1);
    L[0] = 1.0;
    if (N >= 1) L[1] = 1.0 - x;
    for (int k = 1; k < N; ++k)
        L[static_cast<std::size_t>(k) + 1] =
            ((2.0 * k + 1.0 - x) * L[static_cast<std::size_t>(k)] - k * L[static_cast<std::size_t>(k) - 1]) / (k + 1.0);
    return L;
}

// <sigma_alpha(z,t) h_q, h_q>
inline cplx diag_coeff(const MultiIndex& q, double alpha, const CVec& z, double t) {
    if (!(alpha > 0)) throw std::invalid_argument("diag_coeff: alpha must be positive");
    if (q.size() != z.size()) throw std::invalid_argument("diag_coeff: dimension mismatch");
    total(q);
    double z2 = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        z2 += std::norm(z[i]);
        prod *= laguerre_sum(q[i], alpha * std::norm(z[i]) / 2.0);
    }
    return std::exp(cplx(-alpha * z2 / 4.0, alpha * t)) * prod;
}

// average of the diagonal sums over |q| = N, without the exp prefactor
inline double zeta(const CVec& z, int N, double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("zeta: alpha must be positive");
    if (N < 0) throw std::invalid_argument("zeta: N must be nonnegative");
    const std::size_t n = z.size();
    // coefficient of t^N in prod_i sum_k L_k(x_i) t^k
    std::vector<double> acc(static_cast<std::size_t>(N) + 1, 0.0);
    acc[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto L = laguerre_table(N, alpha * std::norm(z[i]) / 2.0);
        std::vector<double> next(acc.size(), 0.0);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; a + b < acc.size(); ++b) next[a + b] += acc[a] * L[b];
        acc.swap(next);
    }
    if (n == 0) return N == 0 ? 1.0 : 0.0;
    return acc[static_cast<std::size_t>(N)] / static_cast<double>(dim_homog(N, static_cast<int>(n)));
}

// (n-1)! sum_j prod c_i^{j_i}/(j_i!)^2 * prod j_i! / (|j|+n-1)!,  c_i = -r^2|z_i|^2/4
inline double bessel_sphere_target(double r, const CVec& z) {
    const int n = static_cast<int>(z.size());
    if (n < 1) throw std::invalid_argument("bessel_sphere_target: empty z");
    std::vector<double> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = -r * r * std::norm(z[static_cast<std::size_t>(i)]) / 4.0;
    const double lead = factorial(n - 1);
    double sum = 0.0;
    bool past_peak = false;
    double prev_level = INFINITY;
    for (int J = 0; J <= 60; ++J) {
        double level = 0.0, level_max = 0.0;
        for (const auto& j : compositions(J, n)) {
            double term = 1.0 / factorial(J + n - 1);
            for (int i = 0; i < n; ++i) {
                const int ji = j[static_cast<std::size_t>(i)];
                term *= std::pow(c[static_cast<std::size_t>(i)], ji) / factorial(ji);
            }
            level += term;
            level_max = std::max(level_max, std::abs(term));
        }
        sum += level;
        if (level_max < prev_level) past_peak = true;
        prev_level = level_max;
        if (past_peak && level_max < 1e-14) break;
    }
    return lead * sum;
}

inline double limit_gap(double r, const CVec& z, int N) {
    if (N < 1) throw std::invalid_argument("limit_gap: N must be positive");
    return std::abs(zeta(z, N, r * r / (2.0 * N)) - bessel_sphere_target(r, z));
}

inline double sub_laplacian_diag(double alpha, const MultiIndex& m) {
    return -std::abs(alpha) * (static_cast<double>(m.size()) + 2.0 * total(m));
}

// ---------------------------------------------------------------------------
// Quadrature oracle for the Fock space with weight e^{-alpha |w|^2 / 2}

using FockFunction = std::function<cplx(const CVec&)>;

// h_q(w) = (alpha/2pi)^{n/2} sqrt(alpha^{|q|} / (2^{|q|} q!)) w^q
inline FockFunction hermite_basis(const MultiIndex& q, double alpha) {
    const double n = static_cast<double>(q.size());
    const int d = total(q);
    const double c = std::pow(alpha / (2.0 * std::numbers::pi), n / 2.0) *
                     std::sqrt(std::pow(alpha / 2.0, d) / multi_factorial(q));
    return [q, c](const CVec& w) {
        cplx v = c;
        for (std::size_t i = 0; i < q.size(); ++i) v *= std::pow(w[i], q[i]);
        return v;
    };
}

// sigma_alpha(z,t) f (w) = e^{i alpha t - alpha|z|^2/4 - (alpha/2)<w,z>} f(w + z)
inline FockFunction sigma(double alpha, const CVec& z, double t, FockFunction f) {
    return [alpha, z, t, f = std::move(f)](const CVec& w) {
        const cplx pre = std::exp(cplx(-alpha * norm2(z) * norm2(z) / 4.0, alpha * t) - (alpha / 2.0) * inner(w, z));
        return pre * f(w + z);
    };
}

struct FockQuadrature {
    int radial = 64;
    int angular = 64;
    double shift = 0.0;  // extra radius for integrands translated by |z|
};

// int f conj(g) e^{-alpha|w|^2/2} dLebesgue on C^n, n in {1, 2}, polar tensor grid
inline cplx fock_inner_numeric(const FockFunction& f, const FockFunction& g, double alpha, int n,
                               const FockQuadrature& qd = {}) {
    if (n < 1 || n > 2) throw std::invalid_argument("fock_inner_numeric: oracle supports n = 1 or 2");
    if (!(alpha > 0)) throw std::invalid_argument("fock_inner_numeric: alpha must be positive");
    const double R = qd.shift + std::sqrt(2.0 * 60.0 / alpha);
    const auto rad = detail::gauss_legendre(qd.radial, 0.0, R);
    const auto ang = detail::periodic_trapezoid(qd.angular);
    std::vector<cplx> pts;
    std::vector<double> wts;
    for (std::size_t a = 0; a < rad.x.size(); ++a)
        for (std::size_t b = 0; b < ang.x.size(); ++b) {
            const double rho = rad.x[a];
            pts.push_back(std::polar(rho, ang.x[b]));
            wts.push_back(rad.w[a] * ang.w[b] * rho * std::exp(-alpha * rho * rho / 2.0));
        }
    cplx s = 0.0;
    CVec w(static_cast<std::size_t>(n));
    if (n == 1) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            w[0] = pts[i];
            s += wts[i] * f(w) * std::conj(g(w));
        }
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j) {
                w[0] = pts[i];
                w[1] = pts[j];
                s += wts[i] * wts[j] * f(w) * std::conj(g(w));
            }
    }
    return s;
}

inline cplx fock_inner_numeric(const MultiIndex& p, const MultiIndex& q, double alpha, const FockQuadrature& qd = {}) {
    if (p.size() != q.size()) throw std::invalid_argument("fock_inner_numeric: dimension mismatch");
    return fock_inner_numeric(hermite_basis(p, alpha), hermite_basis(q, alpha), alpha, static_cast<int>(p.size()), qd);
}

// <sigma_alpha(z,t) h_q, h_q> by quadrature
inline cplx diag_coeff_numeric(const MultiIndex& q, double alpha, const CVec& z, double t, FockQuadrature qd = {}) {
    qd.shift = std::max(qd.shift, norm2(z));
    const auto h = hermite_basis(q, alpha);
    return fock_inner_numeric(sigma(alpha, z, t, h), h, alpha, static_cast<int>(q.size()), qd);
}

// ---------------------------------------------------------------------------
// W(A): f -> f(A^{-1} .) on homogeneous polynomials of degree d, in the
// orthonormal basis w^m / sqrt(m!) ordered as compositions(d, n).

inline CMatrix w_action_matrix(const CMatrix& A, int d) {
    const int n = static_cast<int>(A.size());
    if (d < 0) throw std::invalid_argument("w_action_matrix: degree must be nonnegative");
    const auto basis = compositions(d, n);
    std::map<MultiIndex, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    const CMatrix Ainv = A.adjoint();
    CMatrix W(basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const MultiIndex& m = basis[col];
        // expand prod_i (sum_j Ainv_ij w_j)^{m_i}
        std::map<MultiIndex, cplx> poly{{MultiIndex(static_cast<std::size_t>(n), 0), 1.0}};
        for (int i = 0; i < n; ++i)
            for (int rep = 0; rep < m[static_cast<std::size_t>(i)]; ++rep) {
                std::map<MultiIndex, cplx> next;
                for (const auto& [mono, c] : poly)
                    for (int j = 0; j < n; ++j) {
                        const cplx a = Ainv(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                        if (a == cplx(0.0)) continue;
                        MultiIndex e = mono;
                        ++e[static_cast<std::size_t>(j)];
                        next[e] += c * a;
                    }
                poly.swap(next);
            }
        const double norm_in = std::sqrt(multi_factorial(m));
        for (const auto& [mono, c] : poly) W(index.at(mono), col) = c * std::sqrt(multi_factorial(mono)) / norm_in;
    }
    return W;
}

}  // namespace orbitc
