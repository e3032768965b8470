#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitc/detail/lu.hpp"
#include "orbitc/weights.hpp"

namespace orbitc {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
using RVec = std::vector<double>;

// Dense square complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n, cplx(0.0)) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t size() const { return n_; }
    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<cplx>& data() const { return a_; }

    CMatrix adjoint() const {
        CMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    CMatrix& operator+=(const CMatrix& o) {
        check(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        check(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    CMatrix& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        a.check(b);
        const std::size_t n = a.n_;
        CMatrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx(0.0)) continue;
                for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend CVec operator*(const CMatrix& a, const CVec& v) {
        if (v.size() != a.n_) throw std::invalid_argument("matrix-vector: dimension mismatch");
        CVec r(a.n_, 0.0);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t j = 0; j < a.n_; ++j) r[i] += a(i, j) * v[j];
        return r;
    }

    double frobenius() const {
        double s = 0;
        for (const auto& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

private:
    void check(const CMatrix& o) const {
        if (o.n_ != n_) throw std::invalid_argument("matrix: dimension mismatch");
    }
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

inline CMatrix outer(const CVec& u, const CVec& v) {  // u v^*
    if (u.size() != v.size()) throw std::invalid_argument("outer: dimension mismatch");
    CMatrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    return m;
}

inline double norm2(const CVec& v) {
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

inline CVec operator+(CVec a, const CVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline CVec operator-(CVec a, const CVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline CVec operator*(cplx s, CVec a) {
    for (auto& x : a) x *= s;
    return a;
}

// <u, v> = sum u_i conj(v_i)
inline cplx inner(const CVec& u, const CVec& v) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
    return s;
}

inline bool is_hermitian(const CMatrix& h, double rel = 1e-10) {
    return (h - h.adjoint()).frobenius() <= rel * (1.0 + h.frobenius());
}

inline bool is_skew_hermitian(const CMatrix& s, double rel = 1e-12) {
    return (s + s.adjoint()).frobenius() <= rel * (1.0 + s.frobenius());
}

inline cplx determinant(const CMatrix& m) { return detail::lu_determinant(m.data(), m.size()); }

struct EigenResult {
    RVec values;      // nonincreasing
    CMatrix vectors;  // columns; H = Q diag(values) Q^*
};

// Cyclic complex Jacobi. Throws on non-Hermitian input or when 100 sweeps do not suffice.
inline EigenResult eig_hermitian(const CMatrix& h_in, bool want_vectors = true) {
    if (!is_hermitian(h_in)) throw std::invalid_argument("eig_hermitian: input is not Hermitian");
    const std::size_t n = h_in.size();
    CMatrix h = h_in;
    for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real();
    CMatrix v = CMatrix::identity(n);
    const double scale = h.frobenius();

    auto off = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(h(i, j));
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off() > 1e-13 * scale) {
        if (++sweep > 100) throw std::runtime_error("eig_hermitian: no convergence within 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx g = h(p, q);
                const double ag = std::abs(g);
                if (ag <= 1e-300) continue;
                const double a = h(p, p).real(), b = h(q, q).real();
                const double tau = (b - a) / (2.0 * ag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                const cplx ph = std::conj(g) / ag;  // e^{-i phi}
                const cplx jpp = c, jpq = s, jqp = -s * ph, jqq = c * ph;
                for (std::size_t k = 0; k < n; ++k) {  // H <- H J
                    const cplx hp = h(k, p), hq = h(k, q);
                    h(k, p) = hp * jpp + hq * jqp;
                    h(k, q) = hp * jpq + hq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // H <- J^* H
                    const cplx hp = h(p, k), hq = h(q, k);
                    h(p, k) = std::conj(jpp) * hp + std::conj(jqp) * hq;
                    h(q, k) = std::conj(jpq) * hp + std::conj(jqq) * hq;
                }
                h(p, q) = h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
                if (want_vectors)
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vp = v(k, p), vq = v(k, q);
                        v(k, p) = vp * jpp + vq * jqp;
                        v(k, q) = vp * jpq + vq * jqq;
                    }
            }
    }

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return h(i, i).real() > h(j, j).real(); });
    EigenResult r;
    r.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) r.values[k] = h(idx[k], idx[k]).real();
    if (want_vectors) {
        r.vectors = CMatrix(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) r.vectors(i, k) = v(i, idx[k]);
    }
    return r;
}

inline CMatrix diag_matrix(const RVec& d) {
    CMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

// eigenvalues of S/i
inline RVec spectrum_skew(const CMatrix& s) {
    if (!is_skew_hermitian(s, 1e-10)) throw std::invalid_argument("spectrum_skew: input is not skew-Hermitian");
    return eig_hermitian(s * cplx(0.0, -1.0), false).values;
}

inline CMatrix j_diag(const RVec& lambda) {
    CMatrix m(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) m(i, i) = cplx(0.0, lambda[i]);
    return m;
}

inline RVec to_real(const Weight& w) { return RVec(w.begin(), w.end()); }

inline CMatrix j_diag(const Weight& lambda) { return j_diag(to_real(lambda)); }

// J_mu embedded at rank n = |mu|+1 with a trailing zero row and column
inline CMatrix j_diag_embedded(const Weight& mu) {
    RVec d = to_real(mu);
    d.push_back(0.0);
    return j_diag(d);
}

// J_lambda + i c z z^*
inline CMatrix rank_one_update(const Weight& lambda, const CVec& z, double c) {
    if (z.size() != lambda.size()) throw std::invalid_argument("rank_one_update: dimension mismatch");
    return j_diag(lambda) + outer(z, z) * cplx(0.0, c);
}

// J_mu (+) 0 with last column (-z, ix) and last row (conj z, ix)
inline CMatrix arrowhead(const Weight& mu, const CVec& z, double x) {
    if (z.size() != mu.size()) throw std::invalid_argument("arrowhead: dimension mismatch");
    const std::size_t n = mu.size() + 1;
    CMatrix m = j_diag_embedded(mu);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        m(j, n - 1) = -z[j];
        m(n - 1, j) = std::conj(z[j]);
    }
    m(n - 1, n - 1) = cplx(0.0, x);
    return m;
}

// z x u = (i/2)(u z^* + z u^*)
inline CMatrix cross(const CVec& z, const CVec& u) {
    return (outer(u, z) + outer(z, u)) * cplx(0.0, 0.5);
}

inline double char_poly_Q(const RVec& lambda, const CVec& z, double alpha, double y) {
    if (alpha == 0.0) throw std::invalid_argument("char_poly_Q: alpha must be nonzero");
    if (z.size() != lambda.size()) throw std::invalid_argument("char_poly_Q: dimension mismatch");
    const std::size_t n = lambda.size();
    double prod = 1.0;
    for (double l : lambda) prod *= (y - l);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double p = std::norm(z[j]) / alpha;
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) p *= (y - lambda[i]);
        sum += p;
    }
    return prod - sum;
}

// Requires pairwise distinct mu.
inline double char_poly_P(const RVec& mu, const CVec& z, double x, double y) {
    if (z.size() != mu.size()) throw std::invalid_argument("char_poly_P: dimension mismatch");
    const std::size_t m = mu.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (mu[i] == mu[j]) throw std::invalid_argument("char_poly_P: repeated mu entries");
    double prod = y - x;
    for (double v : mu) prod *= (y - v);
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double p = std::norm(z[j]);
        for (std::size_t i = 0; i < m; ++i)
            if (i != j) p *= (y - mu[i]);
        sum += p;
    }
    return prod - sum;
}

}  // namespace orbitc
