#include <doctest.h>

#include <cmath>

#include "clusterdt/cartan.hpp"
#include "clusterdt/errors.hpp"
#include "clusterdt/fixpoint.hpp"

using namespace clusterdt;
using roots::CartanSpec;

namespace {

double max_abs_diff(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    return (x - y).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("solved fixed points match the closed forms for every type") {
    for (const CartanSpec& spec : roots::all_supported()) {
        CAPTURE(spec.name());
        Eigen::VectorXd a = fixpoint::solve_a(spec);
        Eigen::VectorXd closed = fixpoint::closed_form_a(spec);
        CHECK(max_abs_diff(a, closed) < 1e-9);
        CHECK(fixpoint::residual_a(spec, a) < 1e-10);
    }
}

TEST_CASE("small-rank fixed points take their known exact values") {
    Eigen::VectorXd a1 = fixpoint::closed_form_a(roots::parse_type("A1"));
    CHECK(a1(0) == doctest::Approx(std::sqrt(2.0)));

    // G2: the long-root coordinate is 3, the short-root one is 2.
    Eigen::VectorXd g2 = fixpoint::closed_form_a(roots::parse_type("G2"));
    CHECK(g2(0) == doctest::Approx(3.0));
    CHECK(g2(1) == doctest::Approx(2.0));

    Eigen::VectorXd b4 = fixpoint::closed_form_a(roots::parse_type("B4"));
    CHECK(b4(0) == doctest::Approx(2.0));
    CHECK(b4(1) == doctest::Approx(3.0));
    CHECK(b4(2) == doctest::Approx(4.0));
    CHECK(b4(3) == doctest::Approx(std::sqrt(5.0)));

    // A2: both coordinates equal the golden ratio.
    Eigen::VectorXd a2 = fixpoint::closed_form_a(roots::parse_type("A2"));
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(a2(0) == doctest::Approx(phi));
    CHECK(a2(1) == doctest::Approx(phi));

    // D5: integers 2..4, then sqrt(5) twice.
    Eigen::VectorXd d5 = fixpoint::closed_form_a(roots::parse_type("D5"));
    CHECK(d5(0) == doctest::Approx(2.0));
    CHECK(d5(2) == doctest::Approx(4.0));
    CHECK(d5(3) == doctest::Approx(std::sqrt(5.0)));
    CHECK(d5(4) == doctest::Approx(std::sqrt(5.0)));

    // E8 starts at 2 + sqrt(2).
    Eigen::VectorXd e8 = fixpoint::closed_form_a(roots::parse_type("E8"));
    CHECK(e8.minCoeff() == doctest::Approx(1.0 + std::sqrt(2.0)));
}

TEST_CASE("the cubic unit parametrizing E6 and F4 solves its equation") {
    double eps = fixpoint::epsilon_cubic_root();
    CHECK(eps > 2.0);
    CHECK(eps < 3.0);
    CHECK(std::abs(eps * eps * eps - 2.0 * eps * eps - eps + 1.0) < 1e-12);
    CHECK(eps == doctest::Approx(2.2469796037174672).epsilon(1e-13));
}

TEST_CASE("b, kappa and u derive consistently from a") {
    CartanSpec g2 = roots::parse_type("G2");
    Eigen::VectorXd a = fixpoint::solve_a(g2);
    Eigen::VectorXd b = fixpoint::b_from_a(a);
    CHECK(b(0) == doctest::Approx(8.0));
    CHECK(b(1) == doctest::Approx(3.0));

    double disagreement = 0.0;
    Eigen::VectorXd kappa = fixpoint::kappa_from_a(g2, a, &disagreement);
    CHECK(disagreement < 1e-10);
    CHECK(kappa(0) == doctest::Approx(9.0 / 8.0));
    CHECK(kappa(1) == doctest::Approx(4.0 / 3.0));
    CHECK(max_abs_diff(kappa, fixpoint::kappa_from_b(b)) < 1e-12);

    Eigen::VectorXd u = fixpoint::u_from_kappa(kappa);
    CHECK(u(0) == doctest::Approx(8.0 / 9.0));
    CHECK(u(1) == doctest::Approx(3.0 / 4.0));
    CHECK(fixpoint::residual_u(g2, u) < 1e-12);
    CHECK(fixpoint::residual_b(g2, b) < 1e-12);
}

TEST_CASE("u lands strictly inside the unit interval for every type") {
    for (const CartanSpec& spec : roots::all_supported()) {
        CAPTURE(spec.name());
        fixpoint::FixedPointData data = fixpoint::fixed_point_data(spec);
        CHECK(data.u.minCoeff() > 0.0);
        CHECK(data.u.maxCoeff() < 1.0);
        CHECK(data.kappa.minCoeff() > 1.0);
        CHECK(data.b.minCoeff() > 0.0);
    }
}

TEST_CASE("derivation guards reject out-of-domain inputs") {
    Eigen::VectorXd bad(2);
    bad << 0.5, 2.0;
    CHECK_THROWS_AS(fixpoint::b_from_a(bad), NumericError);

    CartanSpec a2 = roots::parse_type("A2");
    CHECK_THROWS_AS(fixpoint::kappa_from_a(a2, bad), NumericError);

    Eigen::VectorXd wrong_size(3);
    wrong_size << 2.0, 2.0, 2.0;
    CHECK_THROWS_AS(fixpoint::kappa_from_a(a2, wrong_size), NumericError);
}

TEST_CASE("the finiteness gate holds at the fixed point and can fail away from it") {
    CartanSpec a2 = roots::parse_type("A2");
    Eigen::VectorXd a = fixpoint::solve_a(a2);
    CHECK(fixpoint::vinberg_gate(a2.cartan, a));

    // A lopsided positive point: log(a)*A picks up a negative entry.
    Eigen::VectorXd lopsided(2);
    lopsided << 10.0, 1.0001;
    CHECK_FALSE(fixpoint::vinberg_gate(a2.cartan, lopsided));

    for (const CartanSpec& spec : roots::all_supported()) {
        CAPTURE(spec.name());
        CHECK(fixpoint::vinberg_gate(spec.cartan, fixpoint::solve_a(spec)));
    }
}

TEST_CASE("newton converges to the same point from a far-away start") {
    CartanSpec e7 = roots::parse_type("E7");
    Eigen::VectorXd reference = fixpoint::solve_a(e7);

    Eigen::VectorXd start = Eigen::VectorXd::Constant(7, 50.0);
    Eigen::VectorXd from_above = fixpoint::newton_from(e7, start);
    CHECK(max_abs_diff(from_above, reference) < 1e-9);

    start = Eigen::VectorXd::Constant(7, 1.05);
    Eigen::VectorXd from_below = fixpoint::newton_from(e7, start);
    CHECK(max_abs_diff(from_below, reference) < 1e-9);
}
