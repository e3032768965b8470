#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

#include "orbitc/matrix.hpp"
#include "orbitc/weights.hpp"

namespace orbitc {

// A point (U, u, x) of the dual of the Lie algebra.
struct Functional {
    CMatrix U;
    CVec u;
    double x = 0.0;
    std::size_t rank() const { return U.size(); }
};

struct GroupElement {
    CMatrix A;
    CVec z;
    double t = 0.0;
};

struct Generic {
    Weight lambda;
    double alpha = 1.0;
};
struct Intermediate {
    Weight mu;  // rank n-1
    double r = 1.0;
};
struct Character {
    Weight lambda;
};
using OrbitParam = std::variant<Generic, Intermediate, Character>;

inline std::size_t rank_of(const OrbitParam& p) {
    if (auto* g = std::get_if<Generic>(&p)) return g->lambda.size();
    if (auto* m = std::get_if<Intermediate>(&p)) return m->mu.size() + 1;
    return std::get<Character>(p).lambda.size();
}

inline void validate(const OrbitParam& p) {
    if (auto* g = std::get_if<Generic>(&p)) {
        require_dominant(g->lambda, "Generic");
        if (g->alpha == 0.0 || !std::isfinite(g->alpha)) throw std::invalid_argument("Generic: alpha must be nonzero");
    } else if (auto* m = std::get_if<Intermediate>(&p)) {
        if (!m->mu.empty()) require_dominant(m->mu, "Intermediate");
        if (!(m->r > 0.0) || !std::isfinite(m->r)) throw std::invalid_argument("Intermediate: r must be positive");
    } else {
        require_dominant(std::get<Character>(p).lambda, "Character");
    }
}

inline bool is_unitary(const CMatrix& a, double tol = 1e-10) {
    return (a * a.adjoint() - CMatrix::identity(a.size())).frobenius() <= tol;
}

// (A,z,t)(B,z',t') = (AB, z + Az', t + t' - Im<z, Az'>/2)
inline GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
    const CVec az = g.A * h.z;
    return {g.A * h.A, g.z + az, g.t + h.t - 0.5 * inner(g.z, az).imag()};
}

// Ad*(A,z,t)(U,u,x) = (AUA* + z x Au + (x/2) z x z, Au + xz, x)
inline Functional coadjoint_act(const GroupElement& g, const Functional& l) {
    const std::size_t n = l.rank();
    if (g.A.size() != n || g.z.size() != n || l.u.size() != n)
        throw std::invalid_argument("coadjoint_act: dimension mismatch");
    const CVec au = g.A * l.u;
    Functional r;
    r.U = g.A * l.U * g.A.adjoint() + cross(g.z, au) + cross(g.z, g.z) * cplx(0.5 * l.x);
    r.u = au + cplx(l.x) * g.z;
    r.x = l.x;
    return r;
}

inline Functional base_functional(const OrbitParam& p) {
    validate(p);
    Functional f;
    if (auto* g = std::get_if<Generic>(&p)) {
        f.U = j_diag(g->lambda);
        f.u.assign(g->lambda.size(), 0.0);
        f.x = g->alpha;
    } else if (auto* m = std::get_if<Intermediate>(&p)) {
        f.U = j_diag_embedded(m->mu);
        f.u.assign(m->mu.size() + 1, 0.0);
        f.u.back() = m->r;
    } else {
        const auto& c = std::get<Character>(p);
        f.U = j_diag(c.lambda);
        f.u.assign(c.lambda.size(), 0.0);
    }
    return f;
}

// (A(J_lambda + (i/alpha) z z^*)A^*, sqrt(2) A z, alpha)
inline Functional orbit_point_generic(const Weight& lambda, double alpha, const CMatrix& A, const CVec& z) {
    if (alpha == 0.0) throw std::invalid_argument("orbit_point_generic: alpha must be nonzero");
    Functional f;
    f.U = A * rank_one_update(lambda, z, 1.0 / alpha) * A.adjoint();
    f.u = cplx(std::sqrt(2.0)) * (A * z);
    f.x = alpha;
    return f;
}

// true iff the upper-left (n-1)x(n-1) block vanishes
inline bool in_W(const CMatrix& w, double tol = 1e-12) {
    const std::size_t n = w.size();
    double s = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) s += std::norm(w(i, j));
    return std::sqrt(s) <= tol * (1.0 + w.frobenius());
}

// (A(J_mu (+) 0 + w)A^*, A v_r, 0)
inline Functional orbit_point_intermediate(const Weight& mu, double r, const CMatrix& A, const CMatrix& w) {
    const std::size_t n = mu.size() + 1;
    if (A.size() != n || w.size() != n) throw std::invalid_argument("orbit_point_intermediate: dimension mismatch");
    if (!in_W(w)) throw std::invalid_argument("orbit_point_intermediate: w has a nonzero upper-left block");
    CVec v(n, 0.0);
    v.back() = r;
    Functional f;
    f.U = A * (j_diag_embedded(mu) + w) * A.adjoint();
    f.u = A * v;
    f.x = 0.0;
    return f;
}

inline double functional_distance(const Functional& a, const Functional& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("functional_distance: rank mismatch");
    const double du = (a.U - b.U).frobenius();
    const double dv = norm2(a.u - b.u);
    const double dx = a.x - b.x;
    return std::sqrt(du * du + dv * dv + dx * dx);
}

inline bool stabilizer_member(const OrbitParam& p, const GroupElement& g) {
    const Functional l = base_functional(p);
    return functional_distance(coadjoint_act(g, l), l) <= 1e-9;
}

}  // namespace orbitc
