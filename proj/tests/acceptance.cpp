// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "battery.hpp"
#include "common.hpp"
#include "orbitc/orbitc.hpp"

using namespace orbitc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& body, double budget_s = 0.0) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        o.pass = false;
        o.detail += " [over time budget " + std::to_string(budget_s) + " s]";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d: %s  %s | %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::vector<battery::Case> full_battery() {
    std::vector<battery::Case> all = battery::positives();
    for (auto v : {battery::negatives(), battery::agreement_extras()}) all.insert(all.end(), v.begin(), v.end());
    return all;
}

}  // namespace

int main() {
    constexpr double pi = std::numbers::pi;

    run(1, "arrowhead inverse problem", [] {
        Rng rng(101);
        double worst = 0;
        int repeated = 0;
        bool x_exact = true;
        for (int i = 0; i < 500; ++i) {
            const std::size_t n = static_cast<std::size_t>(testgen::uniform_int(rng, 2, 8));
            const Weight lam = testgen::random_dominant(n, rng);
            const Weight mu = testgen::random_interlaced_down(lam, rng);
            for (std::size_t j = 1; j < mu.size(); ++j)
                if (mu[j] == mu[j - 1]) {
                    ++repeated;
                    break;
                }
            const auto s = build_arrowhead(mu, lam);
            worst = std::max(worst, arrowhead_residual(mu, lam, s));
            x_exact = x_exact && s.x == static_cast<double>(weight_sum(lam) - weight_sum(mu));
        }
        return Outcome{worst < 1e-8 && x_exact && repeated > 0,
                       "max spectrum error " + fmt("%.2e", worst) + ", pairs with repeated mu " +
                           std::to_string(repeated) + ", x exact " + (x_exact ? "yes" : "no")};
    }, 5.0);

    run(2, "rank-one inverse problem", [] {
        Rng rng(102);
        double worst = 0, worst_tr = 0;
        for (int sign : {1, -1})
            for (int i = 0; i < 500; ++i) {
                const std::size_t n = static_cast<std::size_t>(testgen::uniform_int(rng, 2, 8));
                const Weight lam = testgen::random_dominant(n, rng);
                const Weight beta = testgen::random_rank_one_target(lam, sign, rng);
                const auto s = build_rank_one(lam, beta, sign);
                worst = std::max(worst, rank_one_residual(lam, beta, s));
                double tr = static_cast<double>(weight_sum(lam) - weight_sum(beta));
                for (double v : s.zmods) tr += sign * v * v;
                worst_tr = std::max(worst_tr, std::abs(tr));
            }
        return Outcome{worst < 1e-8 && worst_tr < 1e-9,
                       "max spectrum error " + fmt("%.2e", worst) + ", max trace error " + fmt("%.2e", worst_tr)};
    });

    run(3, "sum identity", [] {
        Rng rng(103);
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const std::size_t n = static_cast<std::size_t>(testgen::uniform_int(rng, 1, 10));
            const RVec X = testgen::random_reals(n, rng, -10, 10), Y = testgen::random_reals(n - 1, rng, -10, 10);
            const auto k = static_cast<std::size_t>(testgen::uniform_int(rng, 1, static_cast<std::int64_t>(n)));
            const auto [lhs, rhs] = sum_identity_sides(X, Y, k);
            worst = std::max(worst, std::abs(lhs - rhs) / (1 + std::abs(rhs)));
        }
        return Outcome{worst <= 1e-9, "max relative error " + fmt("%.2e", worst)};
    });

    run(4, "interlacing of rank-one updates", [] {
        Rng rng(104);
        int bad = 0;
        for (int i = 0; i < 10000; ++i) {
            const std::size_t n = static_cast<std::size_t>(testgen::uniform_int(rng, 1, 8));
            const Weight lam = testgen::random_dominant(n, rng);
            const CVec z = random_cvec(n, rng, 3.0);
            const double mag = std::exp(testgen::random_reals(1, rng, -3, 3)[0]);
            const double alpha = (i % 2 ? 1.0 : -1.0) * mag;
            if (!update_interlacing_verdict(lam, z, alpha).ok) ++bad;
        }
        return Outcome{bad == 0, std::to_string(bad) + " of 10000 verdicts failed"};
    });

    run(5, "six convergence cases and negative controls", [] {
        Outcome o;
        double worst_pos = 0, worst_neg = 1e300;
        std::string notes;
        for (const auto& c : battery::positives()) {
            const auto r = verify_convergence(c.seq, c.target, 1e-3);
            worst_pos = std::max(worst_pos, r.distances.back());
            if (!r.converged || r.probe) {
                o.pass = false;
                notes += " " + c.name + " did not converge;";
            }
        }
        for (const auto& c : battery::negatives()) {
            const auto r = verify_convergence(c.seq, c.target, 1e-3);
            double mn = 1e300;
            for (std::size_t k = 100; k <= r.distances.size(); ++k) mn = std::min(mn, r.distances[k - 1]);
            worst_neg = std::min(worst_neg, mn);
            if (!(mn > 0.1) || !r.probe) {
                o.pass = false;
                notes += " " + c.name + " came within " + fmt("%.3g", mn) + ";";
            }
        }
        o.detail = std::to_string(battery::positives().size()) + " witness sequences, max distance at k=1e4 " +
                   fmt("%.2e", worst_pos) + "; " + std::to_string(battery::negatives().size()) +
                   " negative controls, min distance for k>=100 " + fmt("%.3g", worst_neg) + notes;
        return o;
    }, 10.0);

    run(6, "orbit side and dual side agree", [] {
        const auto all = full_battery();
        int disagree = 0;
        std::string which;
        for (const auto& c : all)
            if (is_limit_orbit(c.seq, c.target) != rep_side_limit(c.seq, c.target)) {
                ++disagree;
                which += " " + c.name;
            }
        return Outcome{disagree == 0 && all.size() >= 18,
                       std::to_string(all.size()) + " descriptor/target pairs, " + std::to_string(disagree) +
                           " disagreements" + which};
    });

    run(7, "spectral invariants on case 2(i)", [] {
        Outcome o;
        double worst_c = 0, worst_l = 0;
        for (const auto& c : battery::positives()) {
            if (c.seq.kind != SeqKind::Generic || !std::holds_alternative<Intermediate>(c.target)) continue;
            if (c.seq.alpha_at(c.seq.K) < 0) continue;
            const double r = std::get<Intermediate>(c.target).r;
            const bool alpha_to_zero = tends_to(c.seq, detail::alpha_fn(c.seq), 0.0);
            worst_c = std::max(worst_c, std::abs(center_invariant(c.seq, c.seq.K)));
            worst_l = std::max(worst_l, std::abs(spectral_invariant_sublaplacian(c.seq, c.seq.K) + r * r));
            o.pass = o.pass && alpha_to_zero;
        }
        o.pass = o.pass && worst_c < 1e-3 && worst_l < 1e-3;
        o.detail = "max |alpha_K| " + fmt("%.2e", worst_c) + ", max |sub-Laplacian + r^2| " + fmt("%.2e", worst_l);
        return o;
    });

    run(8, "Pieri rule vs Schur oracle", [] {
        Rng rng(108);
        std::uniform_real_distribution<double> u(0, 2 * pi);
        double worst = 0;
        std::size_t checks = 0;
        for (std::size_t n = 1; n <= 4; ++n)
            for (const auto& lam : dominant_weights_in_box(n, 3))
                for (std::int64_t m = 0; m <= 5; ++m) {
                    const auto up = pieri_up(lam, m), down = pieri_down(lam, m);
                    for (int p = 0; p < 5; ++p) {
                        std::vector<cplx> x(n), xi(n);
                        for (std::size_t i = 0; i < n; ++i) {
                            x[i] = std::polar(1.0, u(rng));
                            xi[i] = 1.0 / x[i];
                        }
                        const cplx s = schur_eval(lam, x);
                        cplx su = 0.0, sd = 0.0;
                        for (const auto& w : up) su += schur_eval(w, x);
                        for (const auto& w : down) sd += schur_eval(w, x);
                        // |s_lambda| <= dim and |h_m| <= #monomials on the torus
                        const double scale =
                            static_cast<double>(weyl_dim(lam)) * static_cast<double>(dim_homog(static_cast<int>(m), static_cast<int>(n)));
                        worst = std::max(worst, std::abs(su - s * complete_homogeneous(m, x)) / scale);
                        worst = std::max(worst, std::abs(sd - s * complete_homogeneous(m, xi)) / scale);
                        checks += 2;
                    }
                }
        return Outcome{worst < 1e-9, std::to_string(checks) + " identities, max scaled residual " + fmt("%.2e", worst)};
    });

    run(9, "Gelfand-Tsetlin / Weyl consistency and weight order", [] {
        int bad = 0, total = 0, order_bad = 0, order_total = 0;
        for (std::size_t n = 1; n <= 4; ++n)
            for (const auto& lam : dominant_weights_in_box(n, 3)) {
                ++total;
                if (static_cast<std::int64_t>(gt_weights(lam).size()) != weyl_dim(lam)) ++bad;
            }
        for (std::size_t n = 1; n <= 3; ++n)
            for (const auto& mu : dominant_weights_in_box(n, 4)) {
                if (mu.back() < 0) continue;
                ++order_total;
                if (!verify_weight_order(mu)) ++order_bad;
            }
        return Outcome{bad == 0 && order_bad == 0, std::to_string(total) + " weights (" + std::to_string(bad) +
                                                       " mismatches), " + std::to_string(order_total) +
                                                       " weight-order checks (" + std::to_string(order_bad) +
                                                       " failures)"};
    });

    run(10, "Jacobian of the ball parameterization", [] {
        Rng rng(110);
        std::uniform_real_distribution<double> u(0, 1);
        double worst = 0;
        for (int n = 1; n <= 3; ++n)
            for (int i = 0; i < 100; ++i) {
                SpherePoint p;
                const double margin = 0.01;
                for (;;) {
                    p.s.assign(static_cast<std::size_t>(n - 1), 0.0);
                    double sum = 0;
                    for (auto& v : p.s) sum += v = margin + (1 - n * margin) * u(rng);
                    if (1 - sum >= margin) break;
                }
                p.t.resize(static_cast<std::size_t>(n));
                for (auto& v : p.t) v = 2 * pi * u(rng);
                p.rho = margin + (1 - margin) * u(rng);
                worst = std::max(worst, std::abs(jacobian_numeric(p, 1e-4) - jacobian_analytic(p.rho, n)));
            }
        return Outcome{worst < 1e-5, "300 points, max error " + fmt("%.2e", worst)};
    });

    run(11, "measure decomposition and sphere invariance", [] {
        auto one = [](const RVec&) { return 1.0; };
        auto sq = [](const RVec& x) {
            double s = 0;
            for (double v : x) s += v * v;
            return s;
        };
        auto gauss = [](const RVec& x) {
            double s = 0;
            for (double v : x) s += v * v;
            return std::exp(-s);
        };
        double worst_vol = 0, worst_dec = 0;
        for (int n = 1; n <= 2; ++n) {
            const double vol = std::pow(pi, n) / std::tgamma(n + 1.0);
            const auto b = ball_integral_check(one, n, 200, {8, 16});
            worst_vol = std::max({worst_vol, std::abs(b.lhs - vol) / vol, std::abs(b.rhs - vol) / vol});
            for (const auto& f : {std::function<double(const RVec&)>(sq), std::function<double(const RVec&)>(gauss)}) {
                const auto c = ball_integral_check(f, n, 200, {8, 16});
                worst_dec = std::max(worst_dec, std::abs(c.lhs - c.rhs) / std::abs(c.lhs));
            }
        }
        Rng rng(111);
        const CVec z{cplx(0.9, -0.3), cplx(0.4, 0.8)};
        auto f = [&](const CVec& v) { return plane_wave(v, 1.0, z); };
        const cplx base = sphere_integral(f, 2);
        double worst_inv = 0;
        for (int i = 0; i < 5; ++i) {
            const CMatrix B = haar_unitary(2, rng);
            worst_inv = std::max(worst_inv, std::abs(sphere_integral([&](const CVec& v) { return f(B * v); }, 2) - base));
        }
        return Outcome{worst_vol < 1e-3 && worst_dec < 1e-3 && worst_inv < 2e-4,
                       "ball volume rel. error " + fmt("%.2e", worst_vol) + ", decomposition rel. error " +
                           fmt("%.2e", worst_dec) + ", invariance error " + fmt("%.2e", worst_inv)};
    });

    run(12, "scalar limit of the Fock coefficients", [] {
        Outcome o;
        double worst200 = 0;
        int points = 0, not_smaller = 0;
        for (double a = -2.0; a <= 2.0 + 1e-12; a += 0.5)
            for (double b = -2.0; b <= 2.0 + 1e-12; b += 0.5)
                for (double c : {0.0, 0.5, 1.0}) {
                    const CVec z{cplx(a, b), cplx(c, 0.0)};
                    const double nz = norm2(z);
                    if (nz > 2.0 || nz == 0.0) continue;
                    ++points;
                    const double g200 = limit_gap(1.0, z, 200), g50 = limit_gap(1.0, z, 50);
                    worst200 = std::max(worst200, g200);
                    if (!(g200 < g50)) ++not_smaller;
                }
        double worst_q = 0, worst_sigma = 0;
        for (const CVec& z : {CVec{cplx(1.0), cplx(0.0)}, CVec{cplx(0.5, 0.5), cplx(-1.0, 0.2)}, CVec{cplx(0.0), cplx(0, 2.0)}}) {
            const double series = bessel_sphere_target(1.0, z);
            const cplx quad = sphere_integral([&](const CVec& v) { return plane_wave(v, 1.0, z); }, 2, {24, 128});
            const auto mc = haar_unitary_integral(1.0, z, 100000, 7);
            worst_q = std::max(worst_q, std::abs(quad - series));
            worst_sigma = std::max(worst_sigma, std::abs(mc.mean - series) / mc.std_error);
        }
        o.pass = worst200 < 5e-2 && not_smaller == 0 && worst_q < 1e-4 && worst_sigma < 3.0;
        o.detail = std::to_string(points) + " grid points, max gap(N=200) " + fmt("%.2e", worst200) + ", " +
                   std::to_string(not_smaller) + " points where gap(200) >= gap(50); series vs quadrature " +
                   fmt("%.2e", worst_q) + ", Monte-Carlo within " + fmt("%.2f", worst_sigma) + " sigma";
        return o;
    }, 60.0);

    run(13, "Fock layer", [] {
        double orth = 0;
        for (int p = 0; p <= 4; ++p)
            for (int q = 0; q <= 4; ++q)
                orth = std::max(orth, std::abs(fock_inner_numeric(MultiIndex{p}, MultiIndex{q}, 0.9) - cplx(p == q)));
        const FockQuadrature two{32, 16, 0.0};
        for (const MultiIndex& p : compositions(2, 2))
            for (const MultiIndex& q : compositions(2, 2))
                orth = std::max(orth, std::abs(fock_inner_numeric(p, q, 1.2, two) - cplx(p == q)));
        double diag = 0;
        for (const CVec& z : {CVec{cplx(0.6, 0.3)}, CVec{cplx(-1.2, 0.5)}})
            for (double alpha : {0.5, 1.5})
                for (int q = 0; q <= 3; ++q)
                    diag = std::max(diag, std::abs(diag_coeff({q}, alpha, z, 0.7) - diag_coeff_numeric({q}, alpha, z, 0.7)));
        Rng rng(113);
        double unit = 0, mult = 0;
        for (std::size_t n = 1; n <= 3; ++n)
            for (int d = 0; d <= 5; ++d) {
                const CMatrix A = haar_unitary(n, rng), B = haar_unitary(n, rng);
                const CMatrix WA = w_action_matrix(A, d), WB = w_action_matrix(B, d);
                unit = std::max(unit, (WA * WA.adjoint() - CMatrix::identity(WA.size())).frobenius());
                mult = std::max(mult, (w_action_matrix(A * B, d) - WA * WB).frobenius());
            }
        return Outcome{orth < 1e-6 && diag < 1e-6 && unit < 1e-9 && mult < 1e-9,
                       "orthonormality " + fmt("%.2e", orth) + ", diag_coeff vs quadrature " + fmt("%.2e", diag) +
                           ", W unitarity " + fmt("%.2e", unit) + ", W multiplicativity " + fmt("%.2e", mult)};
    });

    std::printf("%s: %d criterion/criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
