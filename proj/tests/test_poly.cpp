#include <doctest.h>

#include <cmath>
#include <complex>

#include "clusterdt/poly.hpp"

using clusterdt::spectrum::coeff_distance;
using clusterdt::spectrum::cyclic_quotient;
using clusterdt::spectrum::Poly;
using clusterdt::spectrum::poly_pow;
using clusterdt::spectrum::scaled_coeff_distance;

TEST_CASE("construction trims trailing near-zero coefficients") {
    Poly p({1.0, 2.0, 0.0, 1e-15});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1.0);
    CHECK(p.coeff(1) == 2.0);
    CHECK(p.coeff(5) == 0.0);

    CHECK(Poly{}.is_zero());
    CHECK(Poly{0.0}.is_zero());
    CHECK(Poly{}.degree() == -1);
    CHECK(Poly::constant(3.0).degree() == 0);
    CHECK(Poly::monomial(4).degree() == 4);
    CHECK(Poly::monomial(4, 2.5).coeff(4) == 2.5);
}

TEST_CASE("arithmetic matches hand expansion") {
    Poly p{1.0, 1.0};          // 1 + x
    Poly q{-1.0, 1.0};         // -1 + x

    Poly sum = p + q;
    CHECK(sum.degree() == 1);
    CHECK(sum.coeff(0) == 0.0);
    CHECK(sum.coeff(1) == 2.0);

    Poly prod = p * q;          // x^2 - 1
    CHECK(prod.degree() == 2);
    CHECK(prod.coeff(0) == -1.0);
    CHECK(prod.coeff(1) == 0.0);
    CHECK(prod.coeff(2) == 1.0);

    Poly diff = p - p;
    CHECK(diff.is_zero());

    Poly scaled = 2.0 * p;
    CHECK(scaled.coeff(0) == 2.0);
    CHECK((-p).coeff(1) == -1.0);
}

TEST_CASE("evaluation agrees between the real and complex overloads") {
    Poly p{2.0, 0.0, 1.0};      // 2 + x^2
    CHECK(p.eval(3.0) == doctest::Approx(11.0));
    std::complex<double> v = p.eval(std::complex<double>(0.0, 1.0));
    CHECK(v.real() == doctest::Approx(1.0));
    CHECK(v.imag() == doctest::Approx(0.0));
}

TEST_CASE("long division recovers quotient and remainder") {
    // x^2 + x + 1 = (x + 1) * x + 1.
    auto [quot, rem] = Poly::divrem(Poly{1.0, 1.0, 1.0}, Poly{1.0, 1.0});
    CHECK(quot.degree() == 1);
    CHECK(quot.coeff(0) == 0.0);
    CHECK(quot.coeff(1) == 1.0);
    CHECK(rem.degree() == 0);
    CHECK(rem.coeff(0) == doctest::Approx(1.0));

    // Exact divisibility leaves a zero remainder.
    Poly a{-1.0, 0.0, 0.0, 1.0};   // x^3 - 1
    Poly b{-1.0, 1.0};             // x - 1
    auto [q2, r2] = Poly::divrem(a, b);
    CHECK(r2.is_zero());
    CHECK(coeff_distance(q2, cyclic_quotient(3)) < 1e-14);
}

TEST_CASE("roots of a factored quadratic come back as its zeros") {
    Poly p{2.0, -3.0, 1.0};     // (x-1)(x-2)
    auto rs = p.roots();
    REQUIRE(rs.size() == 2);
    double lo = std::min(rs[0].real(), rs[1].real());
    double hi = std::max(rs[0].real(), rs[1].real());
    CHECK(lo == doctest::Approx(1.0));
    CHECK(hi == doctest::Approx(2.0));
    CHECK(std::abs(rs[0].imag()) < 1e-12);
}

TEST_CASE("cyclic quotient and powers expand as expected") {
    Poly c = cyclic_quotient(4);
    CHECK(c.degree() == 3);
    for (int k = 0; k <= 3; ++k) CHECK(c.coeff(k) == 1.0);

    Poly sq = poly_pow(cyclic_quotient(3), 2);   // (1+x+x^2)^2
    CHECK(sq.degree() == 4);
    CHECK(sq.coeff(0) == 1.0);
    CHECK(sq.coeff(1) == 2.0);
    CHECK(sq.coeff(2) == 3.0);
    CHECK(sq.coeff(3) == 2.0);
    CHECK(sq.coeff(4) == 1.0);

    CHECK(poly_pow(Poly{1.0, 1.0}, 0).degree() == 0);
    CHECK(poly_pow(Poly{1.0, 1.0}, 0).coeff(0) == 1.0);
}

TEST_CASE("coefficient distances compare across different degrees") {
    Poly p{1.0, 2.0};
    Poly q{1.0, 2.0, 0.5};
    CHECK(coeff_distance(p, q) == doctest::Approx(0.5));
    CHECK(coeff_distance(p, p) == 0.0);

    // Scaling by a large factor leaves the scaled distance of order one.
    Poly big_a{1e10, 2e10};
    Poly big_b{1e10, 2e10 + 10.0};
    CHECK(coeff_distance(big_a, big_b) == doctest::Approx(10.0));
    CHECK(scaled_coeff_distance(big_a, big_b) == doctest::Approx(10.0 / 2e10));

    // The normalizer is the largest coefficient magnitude, here 2.
    CHECK(scaled_coeff_distance(p, q) == doctest::Approx(0.25));

    // Coefficients below one leave the plain distance untouched.
    Poly small_a{0.1, 0.2};
    Poly small_b{0.1, 0.3};
    CHECK(scaled_coeff_distance(small_a, small_b) == doctest::Approx(0.1));
}
