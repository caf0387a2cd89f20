#include <doctest.h>

#include <cmath>
#include <vector>

#include "clusterdt/cartan.hpp"
#include "clusterdt/errors.hpp"
#include "clusterdt/fixpoint.hpp"
#include "clusterdt/poly.hpp"
#include "clusterdt/spectrum.hpp"

using namespace clusterdt;
using roots::CartanSpec;
using spectrum::Poly;

TEST_CASE("the all-ones linearization of A2 is the known rotation matrix") {
    CartanSpec a2 = roots::parse_type("A2");
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(2);

    auto [L, U] = spectrum::build_LU(ones, a2.cartan);
    CHECK(U(0, 0) == 1.0);
    CHECK(U(0, 1) == -1.0);
    CHECK(U(1, 0) == 0.0);
    CHECK(L(1, 0) == -1.0);
    CHECK(L(0, 1) == 0.0);

    Eigen::MatrixXd M = spectrum::M_matrix(ones, a2.cartan);
    CHECK(M(0, 0) == doctest::Approx(-1.0));
    CHECK(M(0, 1) == doctest::Approx(-1.0));
    CHECK(M(1, 0) == doctest::Approx(1.0));
    CHECK(M(1, 1) == doctest::Approx(0.0));

    // Its characteristic polynomial is x^2 + x + 1, a sixth root of unity
    // pair, matching the A2 tropical period h = 3.
    Poly P = spectrum::char_poly(M);
    CHECK(spectrum::coeff_distance(P, Poly{1.0, 1.0, 1.0}) < 1e-12);
}

TEST_CASE("the two characteristic polynomial routes agree across sizes") {
    for (const char* name : {"A1", "A8", "A12", "B5", "D6", "E8"}) {
        CAPTURE(name);
        CartanSpec spec = roots::parse_type(name);
        Eigen::VectorXd lambda = Eigen::VectorXd::Ones(spec.rank) * 1.5;
        // char_poly(lambda, A) throws InternalCheckError when the trace
        // recursion and the interpolated determinant disagree.
        Poly P = spectrum::char_poly(lambda, spec.cartan);
        CHECK(P.degree() == spec.rank);
    }
}

TEST_CASE("fixed point characteristic polynomials take their spot values") {
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;

    Poly a2 = spectrum::char_poly_at_fixed_point(roots::parse_type("A2"));
    CHECK(spectrum::coeff_distance(a2, Poly{1.0, phi, 1.0}) < 1e-9);

    Poly g2 = spectrum::char_poly_at_fixed_point(roots::parse_type("G2"));
    CHECK(spectrum::coeff_distance(g2, Poly{1.0, 0.0, 1.0}) < 1e-9);

    Poly b2 = spectrum::char_poly_at_fixed_point(roots::parse_type("B2"));
    CHECK(spectrum::coeff_distance(b2, Poly{1.0, 1.0, 1.0}) < 1e-9);

    Poly e7 = spectrum::char_poly_at_fixed_point(roots::parse_type("E7"));
    CHECK(spectrum::coeff_distance(e7, Poly{1.0, phi, 1.0, 0.0, 0.0, 1.0, phi, 1.0}) < 1e-9);

    // B_n and C_n share 1 + x + ... + x^n.
    for (int n : {3, 5, 8}) {
        CAPTURE(n);
        Poly bn = spectrum::char_poly_at_fixed_point(roots::cartan_matrix(roots::Family::B, n));
        CHECK(spectrum::coeff_distance(bn, spectrum::cyclic_quotient(n + 1)) < 1e-9);
    }
    for (int n : {3, 6}) {
        CAPTURE(n);
        Poly cn = spectrum::char_poly_at_fixed_point(roots::cartan_matrix(roots::Family::C, n));
        CHECK(spectrum::coeff_distance(cn, spectrum::cyclic_quotient(n + 1)) < 1e-9);
    }
}

TEST_CASE("degree polynomials are monic, reciprocal and match the linearization") {
    for (const CartanSpec& spec : roots::all_supported()) {
        CAPTURE(spec.name());
        Poly D = spectrum::degree_poly(spec);
        REQUIRE(D.degree() == spec.rank);
        CHECK(D.coeff(spec.rank) == doctest::Approx(1.0));
        // Degrees pair up as d and h+2-d, so the coefficient list is a
        // palindrome.
        for (int k = 0; k <= spec.rank; ++k)
            CHECK(D.coeff(k) == doctest::Approx(D.coeff(spec.rank - k)).epsilon(1e-9));
        Poly P = spectrum::char_poly_at_fixed_point(spec);
        CHECK(spectrum::coeff_distance(P, D) < 1e-8);
    }
}

TEST_CASE("exponents read off the degrees for every type") {
    for (const CartanSpec& spec : roots::all_supported()) {
        CAPTURE(spec.name());
        Poly P = spectrum::char_poly_at_fixed_point(spec);
        std::vector<int> expo = spectrum::exponents(P, spec.coxeter_number + 2);
        CHECK(expo == spec.degrees);
    }
}

TEST_CASE("exponent extraction rejects roots away from the unit circle") {
    // (x-1)(x-2) has a root at 2.
    CHECK_THROWS_AS(spectrum::exponents(Poly{2.0, -3.0, 1.0}, 6), NumericError);
    // x^2 - sqrt(2) x + 1 has roots at angle pi/4, not a multiple of
    // 2*pi/6.
    CHECK_THROWS_AS(spectrum::exponents(Poly{1.0, -std::sqrt(2.0), 1.0}, 6), NumericError);
    // The same polynomial is fine with q = 8.
    CHECK(spectrum::exponents(Poly{1.0, -std::sqrt(2.0), 1.0}, 8) == std::vector<int>{1, 7});
}

TEST_CASE("the D polynomial splits off the previous B polynomial") {
    for (int n = 4; n <= 8; ++n) {
        CAPTURE(n);
        Poly dn = spectrum::char_poly_at_fixed_point(roots::cartan_matrix(roots::Family::D, n));
        Poly bprev =
            spectrum::char_poly_at_fixed_point(roots::cartan_matrix(roots::Family::B, n - 1));
        CHECK(spectrum::coeff_distance(dn, Poly{1.0, 1.0} * bprev) < 1e-8);
    }
}

TEST_CASE("the C polynomial divides the doubled-rank A polynomial") {
    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        Poly cn = spectrum::char_poly_at_fixed_point(roots::cartan_matrix(roots::Family::C, n));
        Poly a2n =
            spectrum::char_poly_at_fixed_point(roots::cartan_matrix(roots::Family::A, 2 * n - 1));
        auto [quot, rem] = Poly::divrem(a2n, cn);
        CHECK(quot.degree() == n - 1);
        CHECK((rem.is_zero() || rem.max_abs_coeff() < 1e-7));
    }
}

TEST_CASE("jacobians of both transformation charts linearize to the same spectrum") {
    for (const char* name : {"A3", "B3", "G2", "D4"}) {
        CAPTURE(name);
        report::Report rep = spectrum::jacobian_check(roots::parse_type(name));
        CHECK(rep.pass);
    }
}

TEST_CASE("the height identity holds at both ends of the size range") {
    for (const char* name : {"A1", "A12", "B8", "E8", "G2"}) {
        CAPTURE(name);
        report::Report rep = spectrum::height_identity(roots::parse_type(name));
        CHECK(rep.pass);
    }
}

TEST_CASE("the all-ones spectrum realizes the degrees shifted by one") {
    for (const char* name : {"A4", "C3", "E6", "F4"}) {
        CAPTURE(name);
        report::Report rep = spectrum::coxeter_spectrum(roots::parse_type(name));
        CHECK(rep.pass);
    }
}

TEST_CASE("the exponent suite aggregates to a passing report") {
    report::Report rep = spectrum::verify_exponents_match_degrees(roots::parse_type("F4"));
    CHECK(rep.pass);
    CHECK(rep.command == "verify_exponents_match_degrees");
    CHECK(rep.spec == "F4");
    CHECK_FALSE(rep.checks.empty());
}
