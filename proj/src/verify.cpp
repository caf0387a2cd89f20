#include "clusterdt/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "clusterdt/bruhat.hpp"
#include "clusterdt/dtmap.hpp"
#include "clusterdt/errors.hpp"
#include "clusterdt/fixpoint.hpp"
#include "clusterdt/mutation.hpp"
#include "clusterdt/spectrum.hpp"

namespace clusterdt::verify {

namespace {

double rel_deviation(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (u.size() == 0) return 0.0;
    return ((u - v).cwiseQuotient(v)).cwiseAbs().maxCoeff();
}

// Deterministic per-type RNG stream independent of evaluation order.
std::uint64_t type_seed(const roots::CartanSpec& spec, std::uint64_t base) {
    return base + 256 * static_cast<std::uint64_t>(spec.family) + spec.rank;
}

class BlockTimer {
  public:
    explicit BlockTimer(report::Report& rep) : rep_(rep) { mark_ = clock::now(); }

    void lap(const std::string& name) {
        auto now = clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - mark_).count();
        rep_.timings_ms.emplace_back(name, ms);
        mark_ = now;
    }

  private:
    using clock = std::chrono::steady_clock;
    report::Report& rep_;
    clock::time_point mark_;
};

} // namespace

report::Report verify_type(const roots::CartanSpec& spec, const Options& opt) {
    report::Report rep("verify", spec.name());
    rep.rng_seed = opt.rng_seed;
    BlockTimer timer(rep);

    const int n = spec.rank;
    const int h = spec.coxeter_number;
    std::mt19937_64 rng(type_seed(spec, opt.rng_seed));

    // Fixed point and derived vectors.
    Eigen::VectorXd a = fixpoint::solve_a(spec);
    rep.add_residual("fixed_point_matches_closed_form",
                     (a - fixpoint::closed_form_a(spec)).cwiseAbs().maxCoeff(), 1e-9);
    rep.add_residual("fixed_point_residual_x_side", fixpoint::residual_a(spec, a), 1e-10);
    Eigen::VectorXd b = fixpoint::b_from_a(a);
    rep.add_residual("fixed_point_residual_y_side", fixpoint::residual_b(spec, b), 1e-10);
    double kappa_disagreement = 0.0;
    Eigen::VectorXd kappa = fixpoint::kappa_from_a(spec, a, &kappa_disagreement);
    rep.add_residual("kappa_formulas_agree", kappa_disagreement, 1e-10);
    rep.add_residual("kappa_from_b_consistent",
                     (fixpoint::kappa_from_b(b) - kappa).cwiseAbs().maxCoeff(), 1e-10);
    rep.add_residual("u_system_residual", fixpoint::residual_u(spec, fixpoint::u_from_kappa(kappa)),
                     1e-10);
    rep.add_flag("finiteness_gate", fixpoint::vinberg_gate(spec.cartan, a));

    // Multi-start probe: Newton from scattered positive starts must land
    // on the same point.
    double probe_spread = 0.0;
    for (int t = 0; t < opt.trials; ++t) {
        Eigen::VectorXd start = dtmap::random_log_uniform(n, rng) * 2.0;
        Eigen::VectorXd root = fixpoint::newton_from(spec, start);
        probe_spread = std::max(probe_spread, (root - a).cwiseAbs().maxCoeff());
    }
    rep.add_residual("uniqueness_probe_spread", probe_spread, 1e-8);
    timer.lap("fixed_point");

    // Root system counts.
    roots::RootSystem rs = roots::enumerate_positive_roots(spec);
    rep.add_flag("positive_root_count",
                 static_cast<int>(rs.positive_roots.size()) == n * h / 2);
    bool kostant_ok = true;
    for (const roots::KostantRow& row : roots::kostant_counts(spec, rs)) {
        kostant_ok = kostant_ok && row.lhs == row.rhs;
    }
    rep.add_flag("height_partition_counts", kostant_ok);
    roots::CountData counts = roots::count_formulas(spec);
    rep.add_flag("cluster_variable_count",
                 counts.num_cluster_vars == static_cast<long long>(n) * (h + 2) / 2);
    rep.add_flag("cluster_count_positive", counts.num_clusters >= 1);
    timer.lap("roots");

    // Mutation involutions and the reddening sequence.
    rep.add_flag("reddening_sequence", mutation::verify_reddening(spec));
    {
        std::uniform_int_distribution<int> pick(1, n);
        int k = pick(rng);
        mutation::NumericSeed seed{mutation::build_BA(spec, true),
                                   dtmap::random_log_uniform(n, rng),
                                   dtmap::random_log_uniform(n, rng)};
        mutation::NumericSeed back = mutation::mutate_x(mutation::mutate_x(seed, k), k);
        rep.add_residual("x_mutation_involution", rel_deviation(back.x, seed.x), 1e-12);
        rep.add_flag("matrix_mutation_involution", back.b.entries == seed.b.entries);

        Eigen::VectorXd y = dtmap::random_log_uniform(n, rng);
        auto [y1, B1] = mutation::mutate_y(y, seed.b.principal(), k);
        auto [y2, B2] = mutation::mutate_y(y1, B1, k);
        rep.add_residual("y_mutation_involution", rel_deviation(y2, y), 1e-12);
        rep.add_flag("y_matrix_mutation_involution", B2 == seed.b.principal());
    }
    timer.lap("mutation");

    // The transformation as a mutation composite, and naturality of the
    // ensemble map.
    dtmap::PositivePoint x0 =
        dtmap::make_point(dtmap::Chart::XChartA, dtmap::random_log_uniform(n, rng));
    dtmap::PositivePoint x1 = dtmap::dt_A(spec, x0);
    {
        mutation::NumericSeed seed{mutation::build_BA(spec, false), x0.coords,
                                   Eigen::VectorXd(0)};
        for (int k = 1; k <= n; ++k) seed = mutation::mutate_x(seed, k);
        rep.add_residual("dt_matches_mutation_composite", rel_deviation(seed.x, x1.coords),
                         1e-12);
    }
    {
        dtmap::PositivePoint y0 = dtmap::ensemble_p(spec, x0);
        dtmap::PositivePoint via_x = dtmap::ensemble_p(spec, x1);
        dtmap::PositivePoint via_y = dtmap::dt_X(spec, y0);
        rep.add_residual("ensemble_map_naturality", rel_deviation(via_x.coords, via_y.coords),
                         1e-9);

        // Frieze windows across m = 0, forcing the backward fill, on
        // both sides.
        dtmap::FriezeTable xt = dtmap::frieze(spec, dtmap::FriezeKind::XFrieze, x0, -2, h + 3);
        rep.add_residual("x_frieze_recurrence_residual", dtmap::frieze_residual(spec, xt), 1e-9);
        dtmap::FriezeTable yt = dtmap::frieze(spec, dtmap::FriezeKind::YFrieze, y0, -2, h + 3);
        rep.add_residual("y_frieze_recurrence_residual", dtmap::frieze_residual(spec, yt), 1e-9);

        bool small_type = (spec.family == roots::Family::A && n <= 4) ||
                          (spec.family == roots::Family::B && n == 2) ||
                          spec.family == roots::Family::G;
        if (small_type) {
            rep.add_flag("distinct_frieze_values",
                         dtmap::distinct_frieze_values(spec, xt) == counts.num_cluster_vars);
        }
    }
    timer.lap("transformation");

    // Periodicity on both sides, with the half period where the longest
    // element acts as -Id.
    dtmap::PeriodicityResult pa =
        dtmap::check_periodicity(spec, dtmap::DTKind::A, opt.trials, opt.rng_seed);
    rep.add_residual("periodicity_x_side", pa.max_rel_error_full, 1e-8);
    if (pa.half_checked) rep.add_residual("half_periodicity_x_side", pa.max_rel_error_half, 1e-8);
    dtmap::PeriodicityResult px =
        dtmap::check_periodicity(spec, dtmap::DTKind::X, opt.trials, opt.rng_seed + 1);
    rep.add_residual("periodicity_y_side", px.max_rel_error_full, 1e-8);
    if (px.half_checked) rep.add_residual("half_periodicity_y_side", px.max_rel_error_half, 1e-8);

    dtmap::SuperunitaryResult su = dtmap::superunitary_check(spec);
    rep.add_margin("superunitary_margin", su.min_entry - 1.0, 1e-6);
    timer.lap("periodicity");

    // Spectral suites.
    rep.merge(spectrum::verify_exponents_match_degrees(spec), "");
    rep.merge(spectrum::jacobian_check(spec), "");
    rep.merge(spectrum::height_identity(spec), "");
    rep.merge(spectrum::coxeter_spectrum(spec), "");

    // Cross-type factorizations of the fixed-point polynomial.
    if (spec.family == roots::Family::D) {
        spectrum::Poly lhs = spectrum::char_poly_at_fixed_point(spec);
        spectrum::Poly rhs =
            spectrum::Poly({1.0, 1.0}) *
            spectrum::char_poly_at_fixed_point(roots::cartan_matrix(roots::Family::B, n - 1));
        rep.add_residual("char_poly_d_splits_off_b", spectrum::coeff_distance(lhs, rhs), 1e-8);
    }
    if (spec.family == roots::Family::C && n <= 6) {
        spectrum::Poly num =
            spectrum::char_poly_at_fixed_point(roots::cartan_matrix(roots::Family::A, 2 * n - 1));
        spectrum::Poly den = spectrum::char_poly_at_fixed_point(spec);
        auto [quot, remainder] = spectrum::Poly::divrem(num, den);
        rep.add_residual("char_poly_c_divides_doubled_a", remainder.max_abs_coeff(), 1e-7);
    }
    timer.lap("spectrum");

    if (opt.tol_scale != 1.0) rep.scale_tolerances(opt.tol_scale);
    return rep;
}

report::Report verify_bruhat(const Options& opt) {
    report::Report rep("verify", "twist-model");
    rep.rng_seed = opt.rng_seed;
    BlockTimer timer(rep);

    std::mt19937_64 rng(opt.rng_seed + 777);
    std::uniform_real_distribution<double> unif(-0.1, 0.1);

    for (int n = 1; n <= 8; ++n) {
        std::string pre = "A" + std::to_string(n) + "_";
        rep.merge(bruhat::twist_spectrum(n), pre);
        rep.merge(bruhat::period_check_full(n, opt.trials, opt.rng_seed + n), pre);

        // The full twist restricted to p = 1, projected to the diagonal,
        // is the same map as the diagonal-only twist.
        bruhat::TriDiag g;
        g.p = Eigen::VectorXd::Ones(n);
        g.q.resize(n + 1);
        const double q_star = 2.0 * std::cos(std::numbers::pi / (n + 3));
        for (int i = 0; i < n; ++i) g.q(i) = q_star * std::exp(unif(rng));
        {
            Eigen::VectorXd phi = bruhat::continuants(bruhat::TriDiag{g.q.head(n), g.p.head(n - 1)});
            g.q(n) = (1.0 + phi(n - 1)) / phi(n);
        }
        bruhat::TriDiag via_full = bruhat::twist_full(g);
        Eigen::VectorXd via_q = bruhat::twist_Q(n, g.q);
        double dev = std::max(rel_deviation(via_full.q, via_q),
                              (via_full.p - Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff());
        rep.add_residual(pre + "chart_coherence_p1_slice", dev, 1e-12);
    }
    timer.lap("twist_orbits");

    for (int n = 1; n <= 6; ++n) {
        int tnn_count = 0;
        double winner = 0.0;
        for (double q : bruhat::vieta_fixed_candidates(n)) {
            bruhat::TriDiag g;
            g.q = Eigen::VectorXd::Constant(n + 1, q);
            g.p = Eigen::VectorXd::Ones(n);
            if (bruhat::tnn_check(g)) {
                ++tnn_count;
                winner = q;
            }
        }
        rep.add_flag("A" + std::to_string(n) + "_tnn_candidate_unique", tnn_count == 1);
        rep.add_residual("A" + std::to_string(n) + "_tnn_candidate_value",
                         std::abs(winner - 2.0 * std::cos(std::numbers::pi / (n + 3))), 1e-10);
    }
    timer.lap("tnn_candidates");

    if (opt.tol_scale != 1.0) rep.scale_tolerances(opt.tol_scale);
    return rep;
}

std::vector<report::Report> verify_all(const Options& opt) {
    std::vector<report::Report> reports;
    for (const roots::CartanSpec& spec : roots::all_supported()) {
        reports.push_back(verify_type(spec, opt));
    }
    reports.push_back(verify_bruhat(opt));
    return reports;
}

} // namespace clusterdt::verify
