#include <doctest.h>

#include <cmath>
#include <vector>

#include <Eigen/LU>

#include "clusterdt/bruhat.hpp"
#include "clusterdt/errors.hpp"
#include "clusterdt/poly.hpp"
#include "clusterdt/spectrum.hpp"

using namespace clusterdt;
using bruhat::TriDiag;

namespace {

TriDiag make_tridiag(std::initializer_list<double> q, std::initializer_list<double> p) {
    TriDiag g;
    g.q = Eigen::VectorXd(static_cast<int>(q.size()));
    g.p = Eigen::VectorXd(static_cast<int>(p.size()));
    int i = 0;
    for (double v : q) g.q(i++) = v;
    i = 0;
    for (double v : p) g.p(i++) = v;
    return g;
}

Eigen::VectorXd q_vector(std::initializer_list<double> q) {
    Eigen::VectorXd v(static_cast<int>(q.size()));
    int i = 0;
    for (double c : q) v(i++) = c;
    return v;
}

} // namespace

TEST_CASE("continuants are the leading principal minors") {
    TriDiag g = make_tridiag({1.0, 2.0, 2.0}, {1.0, 1.0});
    Eigen::VectorXd phi = bruhat::continuants(g);
    REQUIRE(phi.size() == 4);
    CHECK(phi(0) == 1.0);
    CHECK(phi(1) == 1.0);
    CHECK(phi(2) == 1.0);
    CHECK(phi(3) == 1.0);
    CHECK(bruhat::det_via_continuants(g) == doctest::Approx(1.0));

    // Cross-check against the dense determinant.
    CHECK(g.matrix().determinant() == doctest::Approx(1.0));
    CHECK(g.matrix().rows() == 3);
    CHECK(g.matrix()(2, 1) == 1.0);   // fixed subdiagonal
    CHECK(g.matrix()(1, 2) == 1.0);   // p_2
    CHECK(g.matrix()(0, 2) == 0.0);
}

TEST_CASE("the diagonal twist walks its five-cycle at n = 2") {
    std::vector<Eigen::VectorXd> cycle = {
        q_vector({1.0, 2.0, 2.0}), q_vector({2.0, 2.0, 1.0}), q_vector({2.0, 1.0, 3.0}),
        q_vector({1.0, 3.0, 1.0}), q_vector({3.0, 1.0, 2.0}),
    };
    for (std::size_t step = 0; step < cycle.size(); ++step) {
        Eigen::VectorXd next = bruhat::twist_Q(2, cycle[step]);
        const Eigen::VectorXd& expected = cycle[(step + 1) % cycle.size()];
        CHECK((next - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("the diagonal twist rejects vectors off the determinant-one slice") {
    CHECK_THROWS_AS(bruhat::twist_Q(2, q_vector({1.0, 1.0, 1.0})), NumericError);
}

TEST_CASE("at n = 1 the diagonal twist swaps the two entries") {
    Eigen::VectorXd q = q_vector({1.0, 2.0});
    Eigen::VectorXd once = bruhat::twist_Q(1, q);
    CHECK(once(0) == doctest::Approx(2.0));
    CHECK(once(1) == doctest::Approx(1.0));
    Eigen::VectorXd twice = bruhat::twist_Q(1, once);
    CHECK((twice - q).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("the full twist reproduces the hand-computed n = 1 orbit") {
    TriDiag g = make_tridiag({1.0, 3.0}, {2.0});

    TriDiag t1 = bruhat::twist_full(g);
    CHECK(t1.q(0) == doctest::Approx(3.0));
    CHECK(t1.q(1) == doctest::Approx(0.5));
    CHECK(t1.p(0) == doctest::Approx(0.5));

    TriDiag t2 = bruhat::twist_full(t1);
    CHECK(t2.q(0) == doctest::Approx(0.5));
    CHECK(t2.q(1) == doctest::Approx(6.0));
    CHECK(t2.p(0) == doctest::Approx(2.0));   // the p part returns after n+1 steps

    TriDiag t4 = bruhat::twist_full(bruhat::twist_full(t2));
    CHECK(t4.q(0) == doctest::Approx(0.25));
    CHECK(t4.q(1) == doctest::Approx(12.0));
    CHECK(t4.p(0) == doctest::Approx(2.0));

    // After n+3 steps the state is the torus rescaling by t = (1, 4):
    // q_1 scales by t_1/t_2, q_2 by t_2/t_1, p_1 by t_1/t_1 = 1.
    CHECK(t4.q(0) * t4.q(1) == doctest::Approx(g.q(0) * g.q(1)));
}

TEST_CASE("the full twist requires determinant one") {
    CHECK_THROWS_AS(bruhat::twist_full(make_tridiag({1.0, 1.0}, {2.0})), NumericError);
}

TEST_CASE("constant-diagonal continuants at q = 2 count up") {
    std::vector<double> v = bruhat::vieta_values(2.0, 5);
    REQUIRE(v.size() == 6);
    for (int j = 0; j <= 5; ++j) CHECK(v[j] == doctest::Approx(j + 1.0));
}

TEST_CASE("fixed point candidates list the admissible cosine values") {
    std::vector<double> c1 = bruhat::vieta_fixed_candidates(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == doctest::Approx(std::sqrt(2.0)));

    // n = 2: the golden ratio, its conjugate, and -1 (a genuine period-5
    // diagonal with negative entries).
    std::vector<double> c2 = bruhat::vieta_fixed_candidates(2);
    REQUIRE(c2.size() == 3);
    CHECK(c2[0] == doctest::Approx(2.0 * std::cos(M_PI / 5.0)));
    CHECK(c2[1] == doctest::Approx(2.0 * std::cos(3.0 * M_PI / 5.0)));
    CHECK(c2[2] == doctest::Approx(-1.0));

    // n = 3: sqrt(3) and 0; the two cosine families overlap at 0.
    std::vector<double> c3 = bruhat::vieta_fixed_candidates(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0] == doctest::Approx(std::sqrt(3.0)));
    CHECK(c3[1] == doctest::Approx(0.0));

    // Every candidate fixes the diagonal twist or fails positivity; the
    // largest one is always 2*cos(pi/(n+3)).
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        std::vector<double> cands = bruhat::vieta_fixed_candidates(n);
        REQUIRE_FALSE(cands.empty());
        CHECK(cands.front() == doctest::Approx(2.0 * std::cos(M_PI / (n + 3))));
    }
}

TEST_CASE("total nonnegativity accepts the model point and rejects sign drops") {
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(bruhat::tnn_check(bruhat::model_fixed_point(n)));
    }

    // det = -1 at n = 1: a negative 2x2 minor.
    CHECK_FALSE(bruhat::tnn_check(make_tridiag({1.0, 1.0}, {2.0})));

    // A negative diagonal entry is a negative 1x1 minor.
    CHECK_FALSE(bruhat::tnn_check(make_tridiag({-1.0, 1.0, 2.0}, {1.0, 1.0})));

    TriDiag big;
    big.q = Eigen::VectorXd::Ones(8);
    big.p = Eigen::VectorXd::Ones(7);
    CHECK_THROWS_AS(bruhat::tnn_check(big), UnsupportedSizeError);
}

TEST_CASE("the model fixed point is fixed by the full twist") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        TriDiag fp = bruhat::model_fixed_point(n);
        CHECK(std::abs(bruhat::det_via_continuants(fp) - 1.0) < 1e-12);
        TriDiag image = bruhat::twist_full(fp);
        CHECK((image.q - fp.q).cwiseAbs().maxCoeff() < 1e-9);
        CHECK((image.p - fp.p).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("the frozen shift has the cyclotomic-quotient spectrum") {
    Eigen::MatrixXd e1 = bruhat::frozen_action_matrix(1);
    REQUIRE(e1.rows() == 1);
    CHECK(e1(0, 0) == -1.0);

    Eigen::MatrixXd e2 = bruhat::frozen_action_matrix(2);
    CHECK(e2(0, 0) == 0.0);
    CHECK(e2(0, 1) == 1.0);
    CHECK(e2(1, 0) == -1.0);
    CHECK(e2(1, 1) == -1.0);

    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        spectrum::Poly char_e = spectrum::char_poly(bruhat::frozen_action_matrix(n));
        CHECK(spectrum::coeff_distance(char_e, spectrum::cyclic_quotient(n + 1)) < 1e-9);
    }
}

TEST_CASE("the linearized twist spectrum report passes at small rank") {
    for (int n : {1, 2, 3, 5}) {
        CAPTURE(n);
        report::Report rep = bruhat::twist_spectrum(n);
        CHECK(rep.pass);
    }
    CHECK_THROWS_AS(bruhat::twist_spectrum(9), UnsupportedSizeError);
}

TEST_CASE("random orbits close up to the torus rescaling") {
    report::Report rep = bruhat::period_check_full(2, 3, 2024);
    CHECK(rep.pass);
    CHECK(rep.rng_seed == 2024);

    report::Report rep4 = bruhat::period_check_full(4, 2, 77);
    CHECK(rep4.pass);
}
