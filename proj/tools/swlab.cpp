// Command-line front end: fixture generation, axiom verification, series,
// determinant machinery, Schur dimensions, fusion products, Casimir spectra
// and the Weyl-type counting asymptotics.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "swlab/io.hpp"

using swlab::Matrix;
using swlab::Partition;
using swlab::QuadScalar;
using swlab::Symmetry;
using json = swlab::io::json;

namespace {

struct RunConfig {
    int exact_m = 6;
    int float_m = 8;
    double tol = 1e-9;
    std::string output;  // empty = stdout
    std::string format = "json";
};

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        throw swlab::io::parse_error(std::string("bad integer in $") + name);
    }
}

double env_double(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stod(v);
    } catch (...) {
        throw swlab::io::parse_error(std::string("bad number in $") + name);
    }
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty())
        std::cout << text << "\n";
    else
        swlab::io::write_text(cfg.output, text + "\n");
}

void emit(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2)); }

// --- fixtures ---------------------------------------------------------

Matrix<QuadScalar> classical_u2() {
    Matrix<QuadScalar> u(2, 2);
    u(0, 1) = QuadScalar::rational(1, 2);
    u(1, 0) = QuadScalar::rational(-1, 2);
    return u;
}

Matrix<QuadScalar> classical_v2() {
    Matrix<QuadScalar> v(2, 2);
    v(0, 1) = QuadScalar(1);
    v(1, 0) = QuadScalar(-1);
    return v;
}

json make_fixture(const std::string& name, double tol) {
    if (name == "n3_plus" || name == "n3_minus") {
        auto [u, v] = swlab::skew_diagonal_n3(QuadScalar(1), QuadScalar(1), name == "n3_plus");
        auto s = swlab::build_rank2(u, v, tol);
        return swlab::io::symmetry_to_json(s, 5, &u, &v);
    }
    if (name == "sigma2" || name == "sigma3") {
        int n = name == "sigma2" ? 2 : 3;
        return swlab::io::symmetry_to_json(swlab::classical_flip<QuadScalar>(n), 0);
    }
    if (name == "classical2") {
        auto u = classical_u2();
        auto v = classical_v2();
        auto s = swlab::build_rank2(u, v, tol);
        return swlab::io::symmetry_to_json(s, 0, &u, &v);
    }
    if (name == "glued23") {
        auto u = classical_u2();
        auto v = classical_v2();
        auto s1 = swlab::build_rank2(u, v, tol);
        auto [u3, v3] = swlab::skew_diagonal_n3(QuadScalar(1), QuadScalar(1), true);
        auto s2 = swlab::build_rank2(u3, v3, tol);
        return swlab::io::symmetry_to_json(swlab::glue(s1, s2, tol), 5);
    }
    if (name == "super0" || name == "super1") {
        auto s = swlab::super_symmetry<QuadScalar>(QuadScalar(name == "super1" ? 1 : 0), tol);
        return swlab::io::symmetry_to_json(s, 0);
    }
    if (name == "noncentral_n3") {
        QuadScalar e(3, 1, 2, 5);
        QuadScalar d = (QuadScalar(3) - e) * QuadScalar::rational(1, 2);
        Matrix<QuadScalar> u(3, 3), v(3, 3);
        u(0, 2) = QuadScalar(1);
        u(1, 1) = QuadScalar(1);
        u(2, 0) = e;
        v(0, 2) = d;
        v(1, 1) = QuadScalar::rational(-1, 2);
        v(2, 0) = QuadScalar::rational(1, 2);
        auto s = swlab::build_rank2(u, v, tol);
        return swlab::io::symmetry_to_json(s, 5, &u, &v);
    }
    throw swlab::io::parse_error("unknown fixture '" + name + "'");
}

const std::vector<std::string> kFixtureNames = {
    "n3_plus", "n3_minus", "classical2", "sigma2", "sigma3",
    "glued23", "super0",   "super1",     "noncentral_n3"};

// --- helpers ----------------------------------------------------------

Symmetry<QuadScalar> load_symmetry(const std::string& path, double tol) {
    return swlab::io::json_to_symmetry(swlab::io::read_json_file(path), tol);
}

struct EvenContext {
    swlab::PoincareData data;
    int p = 0;
    swlab::DetPair<QuadScalar> dp;
};

EvenContext even_context(const Symmetry<QuadScalar>& s, int K = 5) {
    EvenContext ctx;
    ctx.data = swlab::poincare_series(s, K);
    if (ctx.data.cls != swlab::SeriesClass::even)
        throw std::invalid_argument("operation requires an even symmetry");
    ctx.p = ctx.data.rank;
    ctx.dp = swlab::determinant_pair(s, ctx.p);
    return ctx;
}

void guard_cap(int m, const RunConfig& cfg) {
    if (m > cfg.exact_m)
        throw swlab::cap_exceeded("tensor power " + std::to_string(m) +
                                  " exceeds the exact-mode cap " +
                                  std::to_string(cfg.exact_m) +
                                  " (raise with --exact-m or $SWLAB_EXACT_M)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for involutive Yang-Baxter symmetries: series, "
                 "Schur dimensions, fusion, Casimir spectra, counting asymptotics"};
    app.require_subcommand(1);

    RunConfig cfg;
    try {
        cfg.exact_m = env_int("SWLAB_EXACT_M", 6);
        cfg.float_m = env_int("SWLAB_FLOAT_M", 8);
        cfg.tol = env_double("SWLAB_TOL", 1e-9);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    app.add_option("--exact-m", cfg.exact_m, "exact-mode tensor power cap");
    app.add_option("--float-m", cfg.float_m, "float-mode tensor power cap");
    app.add_option("--tol", cfg.tol, "float-mode tolerance, in (0, 1e-4]");
    app.add_option("-o,--output", cfg.output, "write output here instead of stdout");

    std::string input, name, lambda_text, mu_text, model = "hyperboloid", csv_path;
    int K = 5, n_arg = 3, p_arg = 2;
    long L_spec = 10, L_weyl = 40;
    bool probe = false, list_fixtures = false;

    auto* c_make = app.add_subcommand("make-fixture", "emit a named fixture as JSON");
    c_make->add_option("--name", name, "fixture name");
    c_make->add_flag("--list", list_fixtures, "list fixture names");

    auto* c_verify = app.add_subcommand("verify", "check the twist axioms of a fixture");
    c_verify->add_option("-i,--input", input, "fixture JSON")->required();

    auto* c_poincare = app.add_subcommand("poincare", "Poincare series and classification");
    c_poincare->add_option("-i,--input", input)->required();
    c_poincare->add_option("-K,--degree", K, "series cutoff (default 5)");

    auto* c_det = app.add_subcommand("det", "determinant pair, M/N, centrality");
    c_det->add_option("-i,--input", input)->required();

    auto* c_dual = app.add_subcommand("dual", "column inverse T and the C/B/C_det operators");
    c_dual->add_option("-i,--input", input)->required();

    auto* c_schur = app.add_subcommand("schur-dim", "dim V_lambda, numeric and analytic");
    c_schur->add_option("-i,--input", input)->required();
    c_schur->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();
    c_schur->add_flag("--probe", probe, "emit the root-transport probe report");

    auto* c_fusion = app.add_subcommand("fusion", "fusion product with rank-p reduction");
    c_fusion->add_option("--lhs", lambda_text)->required();
    c_fusion->add_option("--rhs", mu_text)->required();
    c_fusion->add_option("-p,--rank", p_arg, "rank (default 2)");
    c_fusion->add_option("-i,--input", input, "fixture for dimensions and centrality");

    auto* c_casimir = app.add_subcommand("casimir", "Casimir eigenvalue on V_lambda");
    c_casimir->add_option("-i,--input", input)->required();
    c_casimir->add_option("--lambda", lambda_text)->required();

    auto* c_spectrum = app.add_subcommand("spectrum", "hyperboloid / cpn spectrum table");
    c_spectrum->add_option("--model", model, "hyperboloid (default) or cpn");
    c_spectrum->add_option("--n", n_arg, "hyperboloid dimension (n >= 3)");
    c_spectrum->add_option("-p,--rank", p_arg, "cpn rank");
    c_spectrum->add_option("-i,--input", input, "fixture supplying alpha for cpn");
    c_spectrum->add_option("-L,--levels", L_spec, "number of levels (default 10)");
    c_spectrum->add_option("--format", cfg.format, "json (default) or csv");

    auto* c_weyl = app.add_subcommand("weyl", "counting-function asymptotics report");
    c_weyl->add_option("--n", n_arg, "hyperboloid dimension (n >= 3)");
    c_weyl->add_option("-L,--levels", L_weyl, "levels (>= 10, default 40)");
    c_weyl->add_option("--csv", csv_path, "also write the table as CSV here");

    for (auto* sc : {c_make, c_verify, c_poincare, c_det, c_dual, c_schur, c_fusion,
                     c_casimir, c_spectrum, c_weyl})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cfg.tol <= 0 || cfg.tol > 1e-4)
            throw std::invalid_argument("tolerance must lie in (0, 1e-4]");

        if (c_make->parsed()) {
            if (list_fixtures) {
                json j = json::array();
                for (const auto& f : kFixtureNames) j.push_back(f);
                emit(cfg, j);
                return 0;
            }
            if (name.empty()) throw swlab::io::parse_error("make-fixture needs --name or --list");
            emit(cfg, make_fixture(name, cfg.tol));
            return 0;
        }

        if (c_verify->parsed()) {
            auto j = swlab::io::read_json_file(input);
            auto m = swlab::io::fixture_matrix(j);
            auto rep = swlab::verify_matrix(j.at("dim").get<int>(), m, cfg.tol);
            emit(cfg, swlab::io::verification_to_json(rep));
            return rep.all_ok() ? 0 : 1;
        }

        if (c_poincare->parsed()) {
            auto s = load_symmetry(input, cfg.tol);
            guard_cap(K, cfg);
            emit(cfg, swlab::io::poincare_to_json(swlab::poincare_series(s, K)));
            return 0;
        }

        if (c_det->parsed()) {
            auto s = load_symmetry(input, cfg.tol);
            auto ctx = even_context(s);
            auto mn = swlab::mn_matrices(s, ctx.dp);
            auto cen = swlab::centrality(s, ctx.dp);
            json out;
            out["p"] = ctx.p;
            json vv = json::array(), uu = json::array();
            for (const auto& x : ctx.dp.v) vv.push_back(swlab::io::scalar_to_json(x));
            for (const auto& x : ctx.dp.u) uu.push_back(swlab::io::scalar_to_json(x));
            out["v"] = vv;
            out["u"] = uu;
            out["M"] = swlab::io::matrix_to_json(mn.M);
            out["N"] = swlab::io::matrix_to_json(mn.N);
            out["prod_ok"] = mn.prod_ok;
            out["com_ok"] = mn.com_ok;
            out["central"] = cen.central;
            emit(cfg, out);
            return 0;
        }

        if (c_dual->parsed()) {
            auto s = load_symmetry(input, cfg.tol);
            json out;
            auto data = swlab::poincare_series(s, 4);
            if (data.cls == swlab::SeriesClass::even) {
                auto dp = swlab::determinant_pair(s, data.rank);
                auto duals = swlab::dual_tensors(s, &dp);
                out["p"] = data.rank;
                out["C"] = swlab::io::matrix_to_json(duals.C);
                out["B"] = swlab::io::matrix_to_json(duals.B);
                out["Cdet"] = swlab::io::matrix_to_json(duals.Cdet);
                out["trace"] = swlab::io::scalar_to_json(duals.trace);
                out["bc_ok"] = duals.bc_ok;
                out["c_p_cdet_ok"] = duals.c_p_cdet_ok;
                out["b_p_cdet_ok"] = duals.b_p_cdet_ok;
            } else {
                auto duals = swlab::dual_tensors<QuadScalar>(s);
                out["p"] = nullptr;
                out["C"] = swlab::io::matrix_to_json(duals.C);
                out["B"] = swlab::io::matrix_to_json(duals.B);
                out["trace"] = swlab::io::scalar_to_json(duals.trace);
                out["bc_ok"] = duals.bc_ok;
            }
            emit(cfg, out);
            return 0;
        }

        if (c_schur->parsed()) {
            auto s = load_symmetry(input, cfg.tol);
            Partition lam = swlab::io::parse_partition(lambda_text);
            guard_cap(lam.weight(), cfg);
            auto ctx = even_context(s);
            auto dim_numeric = swlab::schur_dim(s, lam);
            auto dim_schur = swlab::schur_from_minus_series(lam, ctx.data.minus, ctx.p);
            json out;
            out["lambda"] = swlab::io::partition_key(lam);
            out["dim_numeric"] = dim_numeric;
            bool integral = dim_schur.is_rational() && dim_schur.den() == 1;
            out["dim_schur"] =
                integral ? swlab::io::mpz_to_json(dim_schur.num_rat()) : json(nullptr);
            out["agree"] = integral && QuadScalar(dim_numeric) == dim_schur;
            if (probe) {
                auto alpha = swlab::roots_alpha(ctx.data);
                out["probe"] = swlab::io::conjecture_report_to_json(
                    swlab::probe_conjecture34(s, lam, alpha));
            }
            emit(cfg, out);
            return 0;
        }

        if (c_fusion->parsed()) {
            Partition lam = swlab::io::parse_partition(lambda_text);
            Partition mu = swlab::io::parse_partition(mu_text);
            json out;
            out["lhs"] = swlab::io::partition_key(lam);
            out["rhs"] = swlab::io::partition_key(mu);
            bool central = true;
            std::vector<QuadScalar> evec;  // minus coefficients = elementary values
            if (!input.empty()) {
                auto s = load_symmetry(input, cfg.tol);
                auto ctx = even_context(s);
                p_arg = ctx.p;
                central = swlab::centrality(s, ctx.dp).central;
                for (int k = 0; k <= ctx.p; ++k) evec.push_back(QuadScalar(ctx.data.minus[k]));
            }
            out["p"] = p_arg;
            out["central"] = central;
            auto raw = swlab::lr_coeffs(lam, mu);
            json raw_j;
            for (const auto& [nu, c] : raw) raw_j[swlab::io::partition_key(nu)] = c;
            out["raw"] = raw_j;
            if (central) {
                auto f = swlab::fuse(lam, mu, p_arg);
                json red_j;
                for (const auto& [nu, c] : f.reduced) red_j[swlab::io::partition_key(nu)] = c;
                out["reduced"] = red_j;
            } else {
                out["reduced"] = nullptr;
                out["note"] = "determinant not central: reduction refused, raw expansion only";
            }
            if (!evec.empty()) {
                auto h_of = [&](const Partition& q) {
                    auto h = swlab::h_from_e(evec, q.empty() ? 0 : q.part(0) + (int)q.length());
                    return swlab::schur_from_h(q, h);
                };
                QuadScalar dl = h_of(lam), dr = h_of(mu), sum;
                for (const auto& [nu, c] : raw)
                    if (static_cast<int>(nu.length()) <= p_arg) sum += QuadScalar(c) * h_of(nu);
                out["dim_lhs"] = swlab::io::mpz_to_json(dl.num_rat());
                out["dim_rhs"] = swlab::io::mpz_to_json(dr.num_rat());
                out["dim_sum"] = swlab::io::mpz_to_json(sum.num_rat());
                out["consistent"] = (dl * dr == sum);
            } else {
                out["dim_lhs"] = nullptr;
                out["dim_rhs"] = nullptr;
                out["dim_sum"] = nullptr;
                out["consistent"] = nullptr;
            }
            emit(cfg, out);
            return 0;
        }

        if (c_casimir->parsed()) {
            auto s = load_symmetry(input, cfg.tol);
            Partition lam = swlab::io::parse_partition(lambda_text);
            guard_cap(lam.weight(), cfg);
            auto ctx = even_context(s);
            auto gamma = swlab::gamma_eigenvalue(lam);
            json out;
            out["lambda"] = swlab::io::partition_key(lam);
            out["m"] = lam.weight();
            out["p"] = ctx.p;
            out["gamma"] = swlab::io::scalar_to_json(gamma);
            auto cas = swlab::casimir_on_component(s, lam, ctx.p);
            out["eig_gl"] = swlab::io::scalar_to_json(cas.value);
            out["eig_sl"] = swlab::io::scalar_to_json(swlab::casimir_sl_eigenvalue(lam, ctx.p));
            out["scalar_check"] = cas.scalar_ok && cas.formula_ok;
            emit(cfg, out);
            return 0;
        }

        if (c_spectrum->parsed()) {
            swlab::SpectrumTable t;
            if (model == "hyperboloid") {
                t = swlab::hyperboloid_spectrum(n_arg, L_spec);
            } else if (model == "cpn") {
                if (input.empty())
                    throw swlab::io::parse_error("cpn model needs -i fixture for alpha");
                auto s = load_symmetry(input, cfg.tol);
                auto ctx = even_context(s);
                if (ctx.p == 2) {
                    std::vector<QuadScalar> alpha = ctx.data.alpha_exact;
                    t = swlab::orbit_spectrum_cpn(ctx.p, alpha, L_spec);
                } else {
                    auto alpha = swlab::roots_alpha(ctx.data);
                    t = swlab::orbit_spectrum_cpn(ctx.p, alpha, L_spec, cfg.tol * 1e3);
                }
            } else {
                throw swlab::io::parse_error("unknown spectrum model '" + model + "'");
            }
            if (cfg.format == "csv")
                emit(cfg, swlab::io::spectrum_to_csv(t));
            else
                emit(cfg, swlab::io::spectrum_to_json(t));
            return 0;
        }

        if (c_weyl->parsed()) {
            auto t = swlab::hyperboloid_spectrum(n_arg, L_weyl);
            auto rep = swlab::weyl_fit(t);
            if (!csv_path.empty())
                swlab::io::write_text(csv_path, swlab::io::spectrum_to_csv(t));
            emit(cfg, swlab::io::weyl_to_json(rep));
            return 0;
        }
    } catch (const swlab::verification_failure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const swlab::io::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const swlab::field_mismatch& e) {
        std::cerr << "field mismatch: " << e.what() << "\n";
        return 2;
    } catch (const swlab::cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const swlab::constraint_violation& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
