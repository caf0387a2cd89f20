#include "clusterdt/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "clusterdt/bruhat.hpp"
#include "clusterdt/cartan.hpp"
#include "clusterdt/dtmap.hpp"
#include "clusterdt/errors.hpp"
#include "clusterdt/fixpoint.hpp"
#include "clusterdt/mutation.hpp"
#include "clusterdt/report.hpp"
#include "clusterdt/spectrum.hpp"
#include "clusterdt/verify.hpp"
#include "clusterdt/version.hpp"

namespace clusterdt::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using report::format_double;

std::string vec_to_string(const Eigen::VectorXd& v) {
    std::string out = "(";
    for (int i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_double(v(i));
    }
    out += ")";
    return out;
}

std::string int_vec_to_string(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(v[i]);
    }
    out += ")";
    return out;
}

std::string poly_to_string(const spectrum::Poly& P) {
    std::string out = "[";
    for (int k = 0; k <= P.degree(); ++k) {
        if (k > 0) out += ", ";
        out += format_double(P.coeff(k));
    }
    out += "]";
    return out;
}

void print_checks(const report::Report& rep) {
    for (const report::Check& c : rep.checks) {
        std::cout << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name
                  << "  residual=" << format_double(c.residual)
                  << "  tolerance=" << format_double(c.tolerance) << "\n";
    }
}

struct GlobalFlags {
    std::string json_path;
    std::string csv_path;
    double tol_scale = 1.0;
    std::uint64_t seed = 12345;
};

// Tolerance scaling, human summary, file outputs, and the exit code.
int finish(std::vector<report::Report>& reps, const GlobalFlags& flags) {
    bool all_pass = true;
    for (report::Report& rep : reps) {
        if (flags.tol_scale != 1.0) rep.scale_tolerances(flags.tol_scale);
        all_pass = all_pass && rep.pass;
    }

    if (reps.size() == 1) {
        print_checks(reps.front());
        std::cout << (reps.front().pass ? "PASS" : "FAIL") << " " << reps.front().command << " "
                  << reps.front().spec << "\n";
    } else {
        for (const report::Report& rep : reps) {
            std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.spec << "  (" << rep.checks.size()
                      << " checks)\n";
            if (!rep.pass) print_checks(rep);
        }
        std::cout << (all_pass ? "PASS" : "FAIL") << " overall (" << reps.size() << " suites)\n";
    }

    if (!flags.json_path.empty()) {
        std::ofstream out(flags.json_path);
        if (!out) {
            std::cerr << "error: cannot write " << flags.json_path << "\n";
            return kExitFail;
        }
        if (reps.size() == 1) {
            out << reps.front().to_json().dump(2) << "\n";
        } else {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const report::Report& rep : reps) arr.push_back(rep.to_json());
            out << arr.dump(2) << "\n";
        }
    }
    if (!flags.csv_path.empty()) {
        std::ofstream out(flags.csv_path);
        if (!out) {
            std::cerr << "error: cannot write " << flags.csv_path << "\n";
            return kExitFail;
        }
        out << report::Report::csv_header() << "\n";
        for (const report::Report& rep : reps) out << rep.to_csv_rows();
    }
    return all_pass ? kExitPass : kExitFail;
}

int run_fixed_point(const std::string& type, const GlobalFlags& flags) {
    roots::CartanSpec spec = roots::parse_type(type);
    report::Report rep("fixed-point", spec.name());
    rep.rng_seed = flags.seed;

    Eigen::VectorXd a = fixpoint::solve_a(spec);
    Eigen::VectorXd closed = fixpoint::closed_form_a(spec);
    Eigen::VectorXd b = fixpoint::b_from_a(a);
    double disagreement = 0.0;
    Eigen::VectorXd kappa = fixpoint::kappa_from_a(spec, a, &disagreement);
    Eigen::VectorXd u = fixpoint::u_from_kappa(kappa);

    std::cout << spec.name() << " fixed point\n";
    std::cout << "  a      = " << vec_to_string(a) << "\n";
    std::cout << "  closed = " << vec_to_string(closed) << "\n";
    std::cout << "  b      = " << vec_to_string(b) << "\n";
    std::cout << "  kappa  = " << vec_to_string(kappa) << "\n";
    std::cout << "  u      = " << vec_to_string(u) << "\n";

    rep.add_residual("matches_closed_form", (a - closed).cwiseAbs().maxCoeff(), 1e-9);
    rep.add_residual("residual_x_side", fixpoint::residual_a(spec, a), 1e-10);
    rep.add_residual("residual_y_side", fixpoint::residual_b(spec, b), 1e-10);
    rep.add_residual("kappa_formulas_agree", disagreement, 1e-10);
    rep.add_residual("u_system_residual", fixpoint::residual_u(spec, u), 1e-10);
    rep.add_flag("finiteness_gate", fixpoint::vinberg_gate(spec.cartan, a));

    std::vector<report::Report> reps{rep};
    return finish(reps, flags);
}

int run_char_poly(const std::string& type, const GlobalFlags& flags) {
    roots::CartanSpec spec = roots::parse_type(type);
    report::Report rep("char-poly", spec.name());
    rep.rng_seed = flags.seed;

    spectrum::Poly P = spectrum::char_poly_at_fixed_point(spec);
    spectrum::Poly D = spectrum::degree_poly(spec);
    std::cout << spec.name() << " polynomials (coefficients, constant term first)\n";
    std::cout << "  linearization: " << poly_to_string(P) << "\n";
    std::cout << "  degree-based:  " << poly_to_string(D) << "\n";
    rep.add_residual("char_poly_equals_degree_poly", spectrum::coeff_distance(P, D), 1e-8);

    std::vector<report::Report> reps{rep};
    return finish(reps, flags);
}

int run_exponents(const std::string& type, const GlobalFlags& flags) {
    roots::CartanSpec spec = roots::parse_type(type);
    spectrum::Poly P = spectrum::char_poly_at_fixed_point(spec);
    std::vector<int> expo = spectrum::exponents(P, spec.coxeter_number + 2);
    std::cout << spec.name() << " cluster exponents " << int_vec_to_string(expo)
              << " vs degrees " << int_vec_to_string(spec.degrees) << "\n";

    report::Report rep = spectrum::verify_exponents_match_degrees(spec);
    rep.command = "exponents";
    rep.rng_seed = flags.seed;
    std::vector<report::Report> reps{rep};
    return finish(reps, flags);
}

int run_periodicity(const std::string& type, int trials, bool half, const GlobalFlags& flags) {
    roots::CartanSpec spec = roots::parse_type(type);
    if (half && !spec.minus_one) {
        std::cerr << "error: " << spec.name()
                  << " has no half period (longest Weyl element is not -Id)\n";
        return kExitUsage;
    }
    report::Report rep("periodicity", spec.name());
    rep.rng_seed = flags.seed;

    dtmap::PeriodicityResult pa =
        dtmap::check_periodicity(spec, dtmap::DTKind::A, trials, flags.seed);
    dtmap::PeriodicityResult px =
        dtmap::check_periodicity(spec, dtmap::DTKind::X, trials, flags.seed + 1);
    std::cout << spec.name() << " period " << pa.period << ", " << trials
              << " random points per side\n";
    std::cout << "  max relative deviation, x side: " << format_double(pa.max_rel_error_full)
              << "\n";
    std::cout << "  max relative deviation, y side: " << format_double(px.max_rel_error_full)
              << "\n";
    rep.add_residual("periodicity_x_side", pa.max_rel_error_full, 1e-8);
    rep.add_residual("periodicity_y_side", px.max_rel_error_full, 1e-8);
    if (half) {
        std::cout << "  half period " << pa.half_period
                  << ", x side: " << format_double(pa.max_rel_error_half)
                  << ", y side: " << format_double(px.max_rel_error_half) << "\n";
        rep.add_residual("half_periodicity_x_side", pa.max_rel_error_half, 1e-8);
        rep.add_residual("half_periodicity_y_side", px.max_rel_error_half, 1e-8);
    }
    std::vector<report::Report> reps{rep};
    return finish(reps, flags);
}

int run_frieze(const std::string& type, const std::string& kind_name, int rows,
               std::vector<double> start, const GlobalFlags& flags) {
    roots::CartanSpec spec = roots::parse_type(type);
    const int n = spec.rank;
    dtmap::FriezeKind kind =
        kind_name == "x" ? dtmap::FriezeKind::XFrieze : dtmap::FriezeKind::YFrieze;
    dtmap::Chart chart = kind_name == "x" ? dtmap::Chart::XChartA : dtmap::Chart::YChartX;

    Eigen::VectorXd seed_row;
    if (start.empty()) {
        Eigen::VectorXd a = fixpoint::solve_a(spec);
        seed_row = kind == dtmap::FriezeKind::XFrieze ? a : fixpoint::b_from_a(a);
    } else {
        if (static_cast<int>(start.size()) != n) {
            std::cerr << "error: --start needs exactly " << n << " values for " << spec.name()
                      << "\n";
            return kExitUsage;
        }
        seed_row = Eigen::Map<Eigen::VectorXd>(start.data(), n);
        if (seed_row.minCoeff() <= 0.0) {
            std::cerr << "error: --start values must be strictly positive\n";
            return kExitUsage;
        }
    }

    dtmap::FriezeTable table =
        dtmap::frieze(spec, kind, dtmap::make_point(chart, seed_row), 0, rows - 1);
    std::cout << spec.name() << " " << kind_name << "-frieze, rows m = 0 .. " << rows - 1 << "\n";
    for (int m = table.m0; m <= table.m1; ++m) {
        std::cout << "  m=" << m << "  " << vec_to_string(table.rows[m - table.m0]) << "\n";
    }

    report::Report rep("frieze", spec.name());
    rep.rng_seed = flags.seed;
    rep.add_residual("frieze_recurrence_residual", dtmap::frieze_residual(spec, table), 1e-9);
    std::vector<report::Report> reps{rep};
    return finish(reps, flags);
}

int run_height_identity(const std::string& type, const GlobalFlags& flags) {
    roots::CartanSpec spec = roots::parse_type(type);
    report::Report rep = spectrum::height_identity(spec);
    rep.command = "height-identity";
    rep.rng_seed = flags.seed;
    std::cout << spec.name() << " height factorization, degree " << spec.rank * spec.coxeter_number
              << " + " << spec.rank << " cyclotomic-quotient factors\n";
    std::vector<report::Report> reps{rep};
    return finish(reps, flags);
}

int run_coxeter(const std::string& type, const GlobalFlags& flags) {
    roots::CartanSpec spec = roots::parse_type(type);
    spectrum::Poly P1 =
        spectrum::char_poly(Eigen::VectorXd::Ones(spec.rank), spec.cartan);
    std::vector<int> expo = spectrum::exponents(P1, spec.coxeter_number);
    std::cout << spec.name() << " Coxeter exponents " << int_vec_to_string(expo)
              << ", degrees " << int_vec_to_string(spec.degrees) << "\n";

    report::Report rep = spectrum::coxeter_spectrum(spec);
    rep.command = "coxeter";
    rep.rng_seed = flags.seed;
    std::vector<report::Report> reps{rep};
    return finish(reps, flags);
}

int run_twist_an(int n, const std::string& action, int trials, const GlobalFlags& flags) {
    if (n < 1 || n > 8 || (action == "tnn" && n > 6)) {
        std::cerr << "error: twist-an supports n = 1..8 (tnn: n = 1..6)\n";
        return kExitUsage;
    }
    std::vector<report::Report> reps;

    if (action == "orbit") {
        report::Report rep("twist-an", "A" + std::to_string(n));
        rep.rng_seed = flags.seed;
        std::mt19937_64 rng(flags.seed);
        std::uniform_real_distribution<double> unif(-0.1, 0.1);
        const double q_star = 2.0 * std::cos(std::numbers::pi / (n + 3));

        Eigen::VectorXd q(n + 1);
        Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
        for (int i = 0; i < n; ++i) q(i) = q_star * std::exp(unif(rng));
        Eigen::VectorXd phi =
            bruhat::continuants(bruhat::TriDiag{q.head(n), ones.head(n - 1)});
        q(n) = (1.0 + phi(n - 1)) / phi(n);

        std::cout << "A" << n << " diagonal-twist orbit (p = 1 slice)\n";
        Eigen::VectorXd cur = q;
        std::cout << "  step 0  " << vec_to_string(cur) << "\n";
        for (int s = 1; s <= n + 3; ++s) {
            cur = bruhat::twist_Q(n, cur);
            std::cout << "  step " << s << "  " << vec_to_string(cur) << "\n";
        }
        rep.add_residual("orbit_returns_after_n_plus_3",
                         ((cur - q).cwiseQuotient(q)).cwiseAbs().maxCoeff(), 1e-7);
        reps.push_back(rep);
    } else if (action == "spectrum") {
        report::Report rep = bruhat::twist_spectrum(n);
        rep.command = "twist-an";
        rep.rng_seed = flags.seed;
        reps.push_back(rep);
    } else if (action == "tnn") {
        report::Report rep("twist-an", "A" + std::to_string(n));
        rep.rng_seed = flags.seed;
        int tnn_count = 0;
        double winner = 0.0;
        std::cout << "A" << n << " constant-diagonal fixed-point candidates\n";
        for (double q : bruhat::vieta_fixed_candidates(n)) {
            bruhat::TriDiag g;
            g.q = Eigen::VectorXd::Constant(n + 1, q);
            g.p = Eigen::VectorXd::Ones(n);
            bool tnn = bruhat::tnn_check(g);
            std::cout << "  q = " << format_double(q)
                      << (tnn ? "  totally nonnegative" : "") << "\n";
            if (tnn) {
                ++tnn_count;
                winner = q;
            }
        }
        rep.add_flag("tnn_candidate_unique", tnn_count == 1);
        rep.add_residual("tnn_candidate_value",
                         std::abs(winner - 2.0 * std::cos(std::numbers::pi / (n + 3))), 1e-10);
        reps.push_back(rep);
    } else {
        report::Report rep = bruhat::period_check_full(n, trials, flags.seed);
        rep.command = "twist-an";
        reps.push_back(rep);
    }
    return finish(reps, flags);
}

int run_verify(const std::string& type, bool all, int trials, const GlobalFlags& flags) {
    verify::Options opt;
    opt.trials = trials;
    opt.rng_seed = flags.seed;
    // finish() applies the uniform tolerance scale once for all commands.
    opt.tol_scale = 1.0;

    std::vector<report::Report> reps;
    if (all) {
        reps = verify::verify_all(opt);
    } else {
        reps.push_back(verify::verify_type(roots::parse_type(type), opt));
    }
    return finish(reps, flags);
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Positive fixed points, spectra and periodicity of finite-type cluster "
                 "transformations"};
    app.name("dtlab");
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);
    // Let --json, --csv, --tol and --seed appear after the subcommand too.
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--json", flags.json_path, "Write the report as JSON to this path");
    app.add_option("--csv", flags.csv_path, "Write flat check rows as CSV to this path");
    app.add_option("--tol", flags.tol_scale, "Scale every check tolerance by this factor")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", flags.seed, "Seed for randomized checks");

    std::string type;
    auto* sub_fixed = app.add_subcommand("fixed-point", "Fixed point and derived vectors");
    sub_fixed->add_option("type", type, "Type name, e.g. A3, b4, E_8")->required();

    auto* sub_char = app.add_subcommand("char-poly", "Linearization and degree polynomials");
    sub_char->add_option("type", type)->required();

    auto* sub_expo = app.add_subcommand("exponents", "Cluster exponents against the degrees");
    sub_expo->add_option("type", type)->required();

    int trials = 20;
    bool half = false;
    auto* sub_period = app.add_subcommand("periodicity", "Return after h+2 transformation steps");
    sub_period->add_option("type", type)->required();
    sub_period->add_option("--trials", trials, "Random points per side")->check(CLI::PositiveNumber);
    sub_period->add_flag("--half", half, "Also check the half period (types with -Id)");

    std::string frieze_kind = "x";
    int frieze_rows = 0;
    std::vector<double> frieze_start;
    auto* sub_frieze = app.add_subcommand("frieze", "Print a frieze window from a seed row");
    sub_frieze->add_option("type", type)->required();
    sub_frieze->add_option("--kind", frieze_kind, "x or y")
        ->check(CLI::IsMember({"x", "y"}))
        ->required();
    sub_frieze->add_option("--rows", frieze_rows, "Number of rows starting at m = 0")
        ->check(CLI::PositiveNumber)
        ->required();
    sub_frieze->add_option("--start", frieze_start,
                           "Comma-separated positive seed row (default: the fixed point)")
        ->delimiter(',');

    auto* sub_height = app.add_subcommand("height-identity", "Root-height factorization check");
    sub_height->add_option("type", type)->required();

    auto* sub_coxeter = app.add_subcommand("coxeter", "Spectrum of the lambda = 1 linearization");
    sub_coxeter->add_option("type", type)->required();

    int twist_n = 0;
    std::string twist_action;
    int twist_trials = 5;
    auto* sub_twist = app.add_subcommand("twist-an", "Tridiagonal model of the type-A twist");
    sub_twist->add_option("n", twist_n, "Model rank, 1..8")->required();
    sub_twist->add_option("action", twist_action, "orbit, spectrum, tnn or period")
        ->required()
        ->check(CLI::IsMember({"orbit", "spectrum", "tnn", "period"}));
    sub_twist->add_option("--trials", twist_trials, "Random orbits for the period action")
        ->check(CLI::PositiveNumber);

    bool verify_all_types = false;
    int verify_trials = 5;
    auto* sub_verify = app.add_subcommand("verify", "Run the full check suite");
    sub_verify->add_option("type", type, "Type name; or use --all");
    sub_verify->add_flag("--all", verify_all_types, "Every supported type plus the twist model");
    sub_verify->add_option("--trials", verify_trials, "Randomized repetitions per experiment")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sub_fixed->parsed()) return run_fixed_point(type, flags);
        if (sub_char->parsed()) return run_char_poly(type, flags);
        if (sub_expo->parsed()) return run_exponents(type, flags);
        if (sub_period->parsed()) return run_periodicity(type, trials, half, flags);
        if (sub_frieze->parsed())
            return run_frieze(type, frieze_kind, frieze_rows, frieze_start, flags);
        if (sub_height->parsed()) return run_height_identity(type, flags);
        if (sub_coxeter->parsed()) return run_coxeter(type, flags);
        if (sub_twist->parsed()) return run_twist_an(twist_n, twist_action, twist_trials, flags);
        if (sub_verify->parsed()) {
            if (verify_all_types != type.empty()) {
                std::cerr << "error: verify needs exactly one of <TYPE> or --all\n";
                return kExitUsage;
            }
            return run_verify(type, verify_all_types, verify_trials, flags);
        }
    } catch (const InvalidTypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedSizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("dtlab");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace clusterdt::cli
