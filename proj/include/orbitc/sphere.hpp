#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "orbitc/detail/lu.hpp"
#include "orbitc/detail/quadrature.hpp"
#include "orbitc/matrix.hpp"
#include "orbitc/random.hpp"

namespace orbitc {

struct SpherePoint {
    RVec s;  // n-1 entries, s_i >= 0, sum <= 1
    RVec t;  // n angles
    double rho = 1.0;
};

inline void check_point(const SpherePoint& p) {
    if (p.t.empty() || p.s.size() + 1 != p.t.size()) throw std::invalid_argument("psi: need |s| = |t| - 1");
    double sum = 0;
    for (double v : p.s) {
        if (v < 0) throw std::invalid_argument("psi: s entries must be nonnegative");
        sum += v;
    }
    if (sum > 1.0 + 1e-14) throw std::invalid_argument("psi: s must lie in the simplex");
    if (!(p.rho > 0.0) || p.rho > 1.0) throw std::invalid_argument("psi: rho must lie in (0, 1]");
}

namespace detail {

// psi without domain checks, for finite differences
inline RVec psi_raw(const RVec& s, const RVec& t, double rho) {
    const std::size_t n = t.size();
    RVec out(2 * n);
    double rest = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = std::sqrt(s[i]);
        out[2 * i] = rho * a * std::cos(t[i]);
        out[2 * i + 1] = rho * a * std::sin(t[i]);
        rest -= s[i];
    }
    const double a = std::sqrt(rest);
    out[2 * n - 2] = rho * a * std::cos(t[n - 1]);
    out[2 * n - 1] = rho * a * std::sin(t[n - 1]);
    return out;
}

inline CVec to_complex(const RVec& x) {
    CVec v(x.size() / 2);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = {x[2 * i], x[2 * i + 1]};
    return v;
}

}  // namespace detail

inline RVec psi(const SpherePoint& p) {
    check_point(p);
    return detail::psi_raw(p.s, p.t, p.rho);
}

inline double jacobian_analytic(double rho, int n) {
    if (n < 1) throw std::invalid_argument("jacobian_analytic: n must be positive");
    return std::pow(rho, 2 * n - 1) / std::pow(2.0, n - 1);
}

// |det| of the central-difference Jacobian of psi in (s, t, rho)
inline double jacobian_numeric(const SpherePoint& p, double h) {
    check_point(p);
    const std::size_t n = p.t.size();
    double sum = 0;
    for (double v : p.s) {
        if (v < 2 * h) throw std::invalid_argument("jacobian_numeric: point too close to the boundary");
        sum += v;
    }
    if (1.0 - sum < 2 * h || p.rho < 2 * h) throw std::invalid_argument("jacobian_numeric: point too close to the boundary");
    const std::size_t m = 2 * n;
    std::vector<double> J(m * m);
    for (std::size_t c = 0; c < m; ++c) {
        SpherePoint a = p, b = p;
        if (c < n - 1) {
            a.s[c] += h;
            b.s[c] -= h;
        } else if (c < 2 * n - 1) {
            a.t[c - (n - 1)] += h;
            b.t[c - (n - 1)] -= h;
        } else {
            a.rho += h;
            b.rho -= h;
        }
        const RVec fa = detail::psi_raw(a.s, a.t, a.rho), fb = detail::psi_raw(b.s, b.t, b.rho);
        for (std::size_t r = 0; r < m; ++r) J[r * m + c] = (fa[r] - fb[r]) / (2 * h);
    }
    return std::abs(detail::lu_determinant(J, m));
}

struct SphereGrid {
    int simplex = 24;  // Gauss-Legendre nodes per collapsed simplex coordinate
    int angular = 64;  // trapezoid nodes per angle
};

// Normalized invariant integral ((n-1)!/(2pi)^n) int_simplex int_angles f(psi(s,t,1)) dt ds.
// F is called with a complex n-vector on the unit sphere.
template <class F>
auto sphere_integral(F&& f, int n, const SphereGrid& g = {}) {
    using R = decltype(f(CVec{}));
    if (n < 1) throw std::invalid_argument("sphere_integral: n must be positive");
    const auto gl = detail::gauss_legendre(g.simplex, 0.0, 1.0);
    const auto tr = detail::periodic_trapezoid(g.angular);
    const std::size_t dim_s = static_cast<std::size_t>(n - 1);

    // simplex nodes by collapsed coordinates s_i = rem * u_i
    std::vector<RVec> snodes;
    std::vector<double> sweights;
    RVec cur(dim_s);
    std::function<void(std::size_t, double, double)> build = [&](std::size_t i, double rem, double w) {
        if (i == dim_s) {
            snodes.push_back(cur);
            sweights.push_back(w);
            return;
        }
        for (std::size_t a = 0; a < gl.x.size(); ++a) {
            cur[i] = rem * gl.x[a];
            build(i + 1, rem * (1.0 - gl.x[a]), w * gl.w[a] * rem);
        }
    };
    build(0, 1.0, 1.0);

    R acc{};
    RVec t(static_cast<std::size_t>(n));
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    const std::size_t m = tr.x.size();
    for (std::size_t si = 0; si < snodes.size(); ++si) {
        R inner_acc{};
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            for (std::size_t i = 0; i < idx.size(); ++i) t[i] = tr.x[idx[i]];
            inner_acc += f(detail::to_complex(detail::psi_raw(snodes[si], t, 1.0)));
            std::size_t d = 0;
            while (d < idx.size() && ++idx[d] == m) idx[d++] = 0;
            if (d == idx.size()) break;
        }
        acc += inner_acc * sweights[si];
    }
    const double ang_w = std::pow(2.0 * std::numbers::pi / m, n);
    const double norm = std::tgamma(static_cast<double>(n)) / std::pow(2.0 * std::numbers::pi, n);
    return acc * (ang_w * norm);
}

inline double sphere_mass(int n) { return std::pow(2.0 * std::numbers::pi, n) / std::tgamma(static_cast<double>(n)); }

struct BallCheck {
    double lhs = 0, rhs = 0;
};

// lhs: midpoint product grid on [-1,1]^{2n} with the ball indicator.
// rhs: int_0^1 rho^{2n-1}/2^{n-1} int f(rho v) dsigma(v) drho, sigma unnormalized.
// F is called with a real 2n-vector.
template <class F>
BallCheck ball_integral_check(F&& f, int n, int grid, const SphereGrid& sg = {}) {
    if (n < 1 || n > 2) throw std::invalid_argument("ball_integral_check: n must be 1 or 2");
    if (grid < 2) throw std::invalid_argument("ball_integral_check: grid too coarse");
    const std::size_t dim = static_cast<std::size_t>(2 * n);
    const double h = 2.0 / grid;
    RVec mid(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) mid[static_cast<std::size_t>(i)] = -1.0 + (i + 0.5) * h;

    BallCheck out;
    RVec x(dim);
    double lhs = 0.0;
    std::function<void(std::size_t, double)> rec = [&](std::size_t d, double r2) {
        if (d + 1 == dim) {
            for (double v : mid) {
                const double q = r2 + v * v;
                if (q > 1.0) continue;
                x[d] = v;
                lhs += f(x);
            }
            return;
        }
        for (double v : mid) {
            const double q = r2 + v * v;
            if (q > 1.0) continue;
            x[d] = v;
            rec(d + 1, q);
        }
    };
    rec(0, 0.0);
    out.lhs = lhs * std::pow(h, static_cast<double>(dim));

    const auto rad = detail::gauss_legendre(48, 0.0, 1.0);
    double rhs = 0.0;
    for (std::size_t a = 0; a < rad.x.size(); ++a) {
        const double rho = rad.x[a];
        const double inner_int = sphere_integral(
            [&](const CVec& v) {
                RVec y(dim);
                for (std::size_t i = 0; i < v.size(); ++i) {
                    y[2 * i] = rho * v[i].real();
                    y[2 * i + 1] = rho * v[i].imag();
                }
                return f(y);
            },
            n, sg);
        rhs += rad.w[a] * jacobian_analytic(rho, n) * inner_int * sphere_mass(n);
    }
    out.rhs = rhs;
    return out;
}

struct MonteCarlo {
    cplx mean;
    double std_error = 0.0;
};

// mean over Haar B of exp(-i Re<B v_r, z>)
inline MonteCarlo haar_unitary_integral(double r, const CVec& z, std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("haar_unitary_integral: need at least one sample");
    const std::size_t n = z.size();
    Rng rng(seed);
    cplx sum = 0.0;
    double sum2 = 0.0;
    for (std::int64_t k = 0; k < samples; ++k) {
        const CMatrix B = haar_unitary(n, rng);
        cplx ip = 0.0;
        for (std::size_t i = 0; i < n; ++i) ip += r * B(i, n - 1) * std::conj(z[i]);
        const cplx v = std::exp(cplx(0.0, -ip.real()));
        sum += v;
        sum2 += std::norm(v);
    }
    const double N = static_cast<double>(samples);
    MonteCarlo mc;
    mc.mean = sum / N;
    const double var = samples > 1 ? std::max(0.0, (sum2 - N * std::norm(mc.mean)) / (N - 1.0)) : 0.0;
    mc.std_error = std::sqrt(var / N);
    return mc;
}

// exp(-i r Re<v, z>), the integrand whose sphere average is the Bessel target
inline cplx plane_wave(const CVec& v, double r, const CVec& z) { return std::exp(cplx(0.0, -r * inner(v, z).real())); }

}  // namespace orbitc
