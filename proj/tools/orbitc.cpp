// orbitc: command-line front end. JSON (or CSV for fock limit-gap) on stdout.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbitc/io.hpp"
#include "orbitc/orbitc.hpp"

using namespace orbitc;
using io::json;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw io::ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int fail(const std::string& msg) {
    emit(json{{"error", msg}});
    return 2;
}

RVec parse_reals(const std::string& s) {
    RVec v;
    for (const auto& part : io::split(s, ',')) v.push_back(io::parse_real(part));
    return v;
}

int sign_of(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw io::ParseError("--sign must be + or -");
}

// k = 1, 10, 100, ... and K
std::vector<std::int64_t> sample_indices(std::int64_t K) {
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; k < K; k *= 10) ks.push_back(k);
    ks.push_back(K);
    return ks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbitc: coadjoint orbits of U(n) x H_n"};
    app.require_subcommand(1, 1);

    // classify
    auto* classify = app.add_subcommand("classify", "enumerate limit orbits of a sequence");
    std::string seq_path;
    std::int64_t bound = 3;
    double explicit_tol = 1e-6;
    classify->add_option("--seq", seq_path, "sequence descriptor JSON file")->required();
    classify->add_option("--bound", bound, "weight entries in [-bound, bound]");
    classify->add_option("--explicit-tol", explicit_tol, "tolerance for explicit lists");

    // construct
    auto* construct = app.add_subcommand("construct", "inverse spectral constructions");
    construct->require_subcommand(1, 1);
    auto* c_arrow = construct->add_subcommand("arrowhead", "arrowhead matrix with prescribed spectrum");
    std::string mu_s, lambda_s, beta_s, sign_s = "+";
    c_arrow->add_option("--mu", mu_s, "weight with n-1 entries")->required();
    c_arrow->add_option("--lambda", lambda_s, "target spectrum (n entries)")->required();
    auto* c_rank = construct->add_subcommand("rank-one", "rank-one update with prescribed spectrum");
    c_rank->add_option("--lambda", lambda_s, "diagonal weight")->required();
    c_rank->add_option("--beta", beta_s, "target spectrum")->required();
    c_rank->add_option("--sign", sign_s, "+ or -");

    // verify
    auto* verify = app.add_subcommand("verify", "witness convergence to a target orbit");
    std::string target_path;
    double tol = 1e-3;
    verify->add_option("--seq", seq_path, "sequence descriptor JSON file")->required();
    verify->add_option("--target", target_path, "target JSON file")->required();
    verify->add_option("--tol", tol, "distance tolerance at k = K");
    verify->add_option("--explicit-tol", explicit_tol, "tolerance for explicit lists");

    // quad
    auto* quad = app.add_subcommand("quad", "sphere integrals");
    quad->require_subcommand(1, 1);
    auto* q_sphere = quad->add_subcommand("sphere", "series / quadrature / Monte-Carlo for the plane-wave average");
    int qn = 2, grid = 64;
    double r = 1.0;
    std::string z_s;
    std::int64_t mc = 0;
    std::uint64_t seed = 0;
    q_sphere->add_option("--n", qn, "complex dimension")->required();
    q_sphere->add_option("--r", r, "radius");
    q_sphere->add_option("--z", z_s, "complex vector, e.g. \"1+0i,0\"")->required();
    q_sphere->add_option("--grid", grid, "trapezoid nodes per angle");
    q_sphere->add_option("--mc", mc, "Monte-Carlo samples (0 = skip)");
    q_sphere->add_option("--seed", seed, "random seed");

    // pieri
    auto* pieri = app.add_subcommand("pieri", "Pieri decomposition");
    std::int64_t m = 0;
    std::string direction = "up";
    pieri->add_option("--lambda", lambda_s, "dominant weight")->required();
    pieri->add_option("--m", m, "degree")->required();
    pieri->add_option("--direction", direction, "up or down");

    // identity
    auto* identity = app.add_subcommand("identity", "both sides of the interpolation sum identity");
    std::string X_s, Y_s;
    std::size_t kk = 1;
    identity->add_option("--X", X_s, "n reals")->required();
    identity->add_option("--Y", Y_s, "n-1 distinct reals")->required();
    identity->add_option("--k", kk, "1-based index")->required();

    // fock
    auto* fock = app.add_subcommand("fock", "Fock-space coefficient limits");
    fock->require_subcommand(1, 1);
    auto* f_gap = fock->add_subcommand("limit-gap", "CSV of |zeta_N - target| with alpha = r^2/(2N)");
    int fn = 2;
    std::string N_s;
    f_gap->add_option("--n", fn, "complex dimension")->required();
    f_gap->add_option("--r", r, "radius");
    f_gap->add_option("--z", z_s, "complex vector")->required();
    f_gap->add_option("--N", N_s, "comma-separated degrees")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << (e.get_exit_code() == 0 ? "" : e.what()) << "\n" << app.help();
        return fail(e.what());
    }

    try {
        LimitOptions opt;
        opt.explicit_tol = explicit_tol;

        if (*classify) {
            if (bound < 0) throw io::ParseError("--bound must be nonnegative");
            const auto s = io::descriptor_from_json(read_json_file(seq_path));
            json lims = json::array();
            for (const auto& t : enumerate_limit_orbits(s, bound, opt)) lims.push_back(io::param_json(t));
            emit(json{{"limits", lims}});
        } else if (*c_arrow) {
            const Weight mu = io::parse_weight(mu_s), lam = io::parse_weight(lambda_s);
            const auto sol = build_arrowhead(mu, lam);
            emit(json{{"zmods", sol.zmods}, {"x", sol.x}, {"residual", arrowhead_residual(mu, lam, sol)}});
        } else if (*c_rank) {
            const Weight lam = io::parse_weight(lambda_s), beta = io::parse_weight(beta_s);
            const int sg = sign_of(sign_s);
            const auto sol = build_rank_one(lam, beta, sg);
            double tr = static_cast<double>(weight_sum(lam) - weight_sum(beta));
            for (double v : sol.zmods) tr += sg * v * v;
            emit(json{{"zmods", sol.zmods},
                      {"sign", sg},
                      {"residual", rank_one_residual(lam, beta, sol)},
                      {"trace_error", std::abs(tr)}});
        } else if (*verify) {
            const auto s = io::descriptor_from_json(read_json_file(seq_path));
            const auto target = io::param_from_json(read_json_file(target_path));
            if (rank_of(target) != s.n) throw io::ParseError("target rank does not match the sequence");
            const auto rep = verify_convergence(s, target, tol, opt);
            json samples = json::array();
            if (rep.distances.size() == static_cast<std::size_t>(s.K))
                for (auto k : sample_indices(s.K))
                    samples.push_back({{"k", k}, {"distance", rep.distances[static_cast<std::size_t>(k - 1)]}});
            double tail_min = INFINITY;
            for (std::size_t i = 99; i < rep.distances.size(); ++i) tail_min = std::min(tail_min, rep.distances[i]);
            emit(json{{"target", io::param_json(target)},
                      {"is_limit", !rep.probe},
                      {"rep_side", rep_side_limit(s, target, opt)},
                      {"converged", rep.converged},
                      {"probe", rep.probe},
                      {"final_distance", rep.distances.empty() ? json(nullptr) : json(rep.distances.back())},
                      {"min_distance_from_100", std::isfinite(tail_min) ? json(tail_min) : json(nullptr)},
                      {"lower_bound_at_K", orbit_distance_lower_bound(s, s.K, target)},
                      {"samples", samples},
                      {"diagnostic", rep.diagnostic}});
        } else if (*q_sphere) {
            const CVec z = io::parse_cvec(z_s);
            if (qn < 1 || static_cast<std::size_t>(qn) != z.size()) throw io::ParseError("--z must have n entries");
            if (grid < 4) throw io::ParseError("--grid must be at least 4");
            if (mc < 0) throw io::ParseError("--mc must be nonnegative");
            const double series = bessel_sphere_target(r, z);
            const cplx q = sphere_integral([&](const CVec& v) { return plane_wave(v, r, z); }, qn,
                                           SphereGrid{24, grid});
            json out{{"series", series}, {"quadrature", q.real()}, {"quadrature_imag", q.imag()},
                     {"montecarlo", nullptr}, {"montecarlo_imag", nullptr}, {"stderr", nullptr}, {"seed", seed}};
            if (mc > 0) {
                const auto res = haar_unitary_integral(r, z, mc, seed);
                out["montecarlo"] = res.mean.real();
                out["montecarlo_imag"] = res.mean.imag();
                out["stderr"] = res.std_error;
            }
            emit(out);
        } else if (*pieri) {
            const Weight lam = io::parse_weight(lambda_s);
            require_dominant(lam, "--lambda");
            if (m < 0) throw io::ParseError("--m must be nonnegative");
            if (direction != "up" && direction != "down") throw io::ParseError("--direction must be up or down");
            emit(json{{"result", direction == "up" ? pieri_up(lam, m) : pieri_down(lam, m)}});
        } else if (*identity) {
            const auto [lhs, rhs] = sum_identity_sides(parse_reals(X_s), parse_reals(Y_s), kk);
            emit(json{{"lhs", lhs}, {"rhs", rhs}, {"abs_error", std::abs(lhs - rhs)}});
        } else if (*f_gap) {
            const CVec z = io::parse_cvec(z_s);
            if (fn < 1 || static_cast<std::size_t>(fn) != z.size()) throw io::ParseError("--z must have n entries");
            std::ostringstream out;
            out << "N,gap\n";
            for (const auto& part : io::split(N_s, ',')) {
                const auto N = io::parse_int(part);
                if (N < 1) throw io::ParseError("--N entries must be positive");
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.17g", limit_gap(r, z, static_cast<int>(N)));
                out << N << "," << buf << "\n";
            }
            std::cout << out.str();
        }
    } catch (const std::invalid_argument& e) {
        return fail(e.what());
    } catch (const std::out_of_range& e) {
        return fail(e.what());
    } catch (const json::exception& e) {
        // wrongly typed field in an input file
        return fail(e.what());
    } catch (const std::exception& e) {
        emit(json{{"error", e.what()}});
        return 1;
    }
    return 0;
}
