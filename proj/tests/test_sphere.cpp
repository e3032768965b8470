#include <gtest/gtest.h>

#include <numbers>

#include "orbitc/fock.hpp"
#include "orbitc/random.hpp"
#include "orbitc/sphere.hpp"

using namespace orbitc;

namespace {

constexpr double pi = std::numbers::pi;

SpherePoint random_interior(int n, Rng& rng, double margin) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SpherePoint p;
    // uniform point in the shrunken simplex
    for (;;) {
        p.s.assign(static_cast<std::size_t>(n - 1), 0.0);
        double sum = 0;
        for (auto& v : p.s) {
            v = margin + (1.0 - n * margin) * u(rng);
            sum += v;
        }
        if (1.0 - sum >= margin) break;
    }
    p.t.resize(static_cast<std::size_t>(n));
    for (auto& v : p.t) v = 2 * pi * u(rng);
    p.rho = margin + (1.0 - margin) * u(rng);
    return p;
}

}  // namespace

TEST(Sphere, PsiExamples) {
    EXPECT_EQ(psi({{}, {0.0}, 1.0}), (RVec{1.0, 0.0}));
    EXPECT_EQ(psi({{1.0}, {0.0, 0.0}, 1.0}), (RVec{1.0, 0.0, 0.0, 0.0}));
    Rng rng(1);
    for (int n = 1; n <= 4; ++n) {
        const auto p = random_interior(n, rng, 0.01);
        double s = 0;
        for (double v : psi(p)) s += v * v;
        EXPECT_NEAR(std::sqrt(s), p.rho, 1e-14);
    }
    EXPECT_THROW(psi({{0.7, 0.7}, {0, 0, 0}, 1.0}), std::invalid_argument);
    EXPECT_THROW(psi({{0.2}, {0}, 1.0}), std::invalid_argument);
    EXPECT_THROW(psi({{}, {0}, 0.0}), std::invalid_argument);
}

TEST(Sphere, JacobianAnalytic) {
    EXPECT_DOUBLE_EQ(jacobian_analytic(0.3, 1), 0.3);
    EXPECT_DOUBLE_EQ(jacobian_analytic(1.0, 2), 0.5);
    EXPECT_DOUBLE_EQ(jacobian_analytic(0.5, 2), 0.0625);
}

TEST(Sphere, JacobianNumeric) {
    Rng rng(2);
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i < 100; ++i) {
            const auto p = random_interior(n, rng, 0.01);
            EXPECT_NEAR(jacobian_numeric(p, 1e-4), jacobian_analytic(p.rho, n), 1e-5);
        }
    EXPECT_THROW(jacobian_numeric({{1e-5}, {0, 0}, 0.5}, 1e-4), std::invalid_argument);
}

TEST(Sphere, Normalization) {
    for (int n = 1; n <= 3; ++n) {
        EXPECT_NEAR(sphere_integral([](const CVec&) { return 1.0; }, n, {16, 16}), 1.0, 1e-13);
        EXPECT_NEAR(sphere_integral([](const CVec& v) { return std::norm(v[0]); }, n, {16, 16}), 1.0 / n, 1e-13);
    }
    EXPECT_NEAR(sphere_mass(1), 2 * pi, 1e-15);
    EXPECT_NEAR(sphere_mass(2), 4 * pi * pi, 1e-13);
}

TEST(Sphere, PlaneWaveMatchesSeries) {
    for (double r : {0.5, 1.0, 2.0})
        for (const CVec& z : {CVec{cplx(2.0)}, CVec{cplx(1.0), cplx(0.0)}, CVec{cplx(0.8, 0.6), cplx(-1.0, 1.0)}}) {
            const cplx q = sphere_integral([&](const CVec& v) { return plane_wave(v, r, z); },
                                           static_cast<int>(z.size()), {24, 64});
            EXPECT_NEAR(q.real(), bessel_sphere_target(r, z), 1e-4);
            EXPECT_NEAR(q.imag(), 0.0, 1e-10);
        }
}

TEST(Sphere, UnitaryInvariance) {
    Rng rng(3);
    const CVec z{cplx(0.9, -0.3), cplx(0.4, 0.8)};
    auto f = [&](const CVec& v) { return plane_wave(v, 1.0, z); };
    const cplx base = sphere_integral(f, 2);
    for (int i = 0; i < 5; ++i) {
        const CMatrix B = haar_unitary(2, rng);
        const cplx moved = sphere_integral([&](const CVec& v) { return f(B * v); }, 2);
        EXPECT_LT(std::abs(moved - base), 2e-4);
    }
}

TEST(Sphere, BallDecomposition) {
    auto one = [](const RVec&) { return 1.0; };
    auto sq = [](const RVec& x) {
        double s = 0;
        for (double v : x) s += v * v;
        return s;
    };
    const auto b1 = ball_integral_check(one, 1, 200);
    EXPECT_NEAR(b1.rhs, pi, 1e-10);
    EXPECT_LT(std::abs(b1.lhs - b1.rhs) / b1.lhs, 1e-3);
    const auto b2 = ball_integral_check(sq, 1, 200);
    EXPECT_NEAR(b2.rhs, pi / 2, 1e-10);
    EXPECT_LT(std::abs(b2.lhs - b2.rhs) / b2.lhs, 1e-3);
    const auto b3 = ball_integral_check(one, 2, 100, {8, 8});
    EXPECT_NEAR(b3.rhs, pi * pi / 2, 1e-10);
    EXPECT_LT(std::abs(b3.lhs - b3.rhs) / b3.lhs, 3e-3);
    EXPECT_THROW(ball_integral_check(one, 3, 10), std::invalid_argument);
}

TEST(Sphere, MonteCarlo) {
    EXPECT_EQ(haar_unitary_integral(1.0, CVec(2, 0.0), 50, 1).mean, cplx(1.0));
    const CVec z1{cplx(1.5)};
    const auto m1 = haar_unitary_integral(1.0, z1, 20000, 3);
    EXPECT_LT(std::abs(m1.mean.real() - std::cyl_bessel_j(0.0, 1.5)), 3 * m1.std_error);
    const CVec z2{cplx(1.0), cplx(0.0, 0.5)};
    const auto m2 = haar_unitary_integral(1.0, z2, 20000, 4);
    EXPECT_LT(std::abs(m2.mean.real() - bessel_sphere_target(1.0, z2)), 3 * m2.std_error);
    // same seed, same answer
    EXPECT_EQ(haar_unitary_integral(1.0, z2, 100, 9).mean, haar_unitary_integral(1.0, z2, 100, 9).mean);
    EXPECT_THROW(haar_unitary_integral(1.0, z2, 0, 1), std::invalid_argument);
}
