#include "clusterdt/spectrum.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "clusterdt/dtmap.hpp"
#include "clusterdt/errors.hpp"
#include "clusterdt/fixpoint.hpp"
#include "clusterdt/instrument.hpp"

namespace clusterdt::spectrum {

namespace {

using roots::CartanSpec;
using roots::Family;

constexpr double kPi = std::numbers::pi;

std::string coeff_list(const Poly& p) {
    std::string out = "[";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) out += ", ";
        out += report::format_double(p.coeff(k));
    }
    return out + "]";
}

// Trace recursion for det(xI - M); returns coefficients lowest first.
Poly faddeev_leverrier(const Eigen::MatrixXd& M) {
    const int n = static_cast<int>(M.rows());
    std::vector<double> coeffs(n + 1, 0.0);
    coeffs[n] = 1.0;

    Eigen::MatrixXd Mk = M;
    double ck = -Mk.trace();
    coeffs[n - 1] = ck;
    for (int k = 2; k <= n; ++k) {
        Mk = M * (Mk + ck * Eigen::MatrixXd::Identity(n, n));
        ck = -Mk.trace() / k;
        coeffs[n - k] = ck;
    }
    return Poly(std::move(coeffs));
}

// Interpolate a degree-n polynomial from its values at the (n+1)-st
// roots of unity: the inverse discrete Fourier transform, which is
// Lagrange interpolation at those nodes with unit condition number.
// Real nodes lose digits already around degree 8, where determinant
// values reach 5^n while the coefficients stay O(1).
Poly interpolate_at_roots_of_unity(const std::vector<std::complex<double>>& values) {
    const int m = static_cast<int>(values.size());
    double value_scale = 1.0;
    for (const auto& v : values) value_scale = std::max(value_scale, std::abs(v));

    std::vector<double> coeffs(m);
    double stray_imag = 0.0;
    for (int j = 0; j < m; ++j) {
        std::complex<double> c = 0.0;
        for (int k = 0; k < m; ++k) {
            c += values[k] * std::polar(1.0, -2.0 * kPi * j * k / m);
        }
        c /= static_cast<double>(m);
        stray_imag = std::max(stray_imag, std::abs(c.imag()));
        coeffs[j] = c.real();
    }
    if (stray_imag > 1e-9 * value_scale) {
        throw InternalCheckError("interpolation of a real polynomial left an imaginary "
                                 "residue of " + report::format_double(stray_imag));
    }
    return Poly(std::move(coeffs));
}

Poly closed_form_degree_poly(const CartanSpec& spec) {
    const int n = spec.rank;
    std::vector<double> c;

    switch (spec.family) {
    case Family::A: {
        double theta = kPi / (n + 3);
        for (int j = 0; j <= n; ++j) {
            c.push_back(std::sin((j + 1) * theta) * std::sin((j + 2) * theta) /
                        (std::sin(theta) * std::sin(2 * theta)));
        }
        break;
    }
    case Family::B:
    case Family::C:
        c.assign(n + 1, 1.0);
        break;
    case Family::D:
        c.assign(n + 1, 2.0);
        c.front() = 1.0;
        c.back() = 1.0;
        break;
    case Family::E: {
        if (n == 6) {
            double b1 = 2.0 * std::cos(kPi / 7.0);
            double b2 = 1.0 + 2.0 * std::cos(3.0 * kPi / 7.0);
            double b3 = 2.0 * std::cos(2.0 * kPi / 7.0) + 2.0 * std::cos(4.0 * kPi / 7.0);
            c = {1.0, b1, b2, b3, b2, b1, 1.0};
        } else if (n == 7) {
            double tau = (1.0 + std::sqrt(5.0)) / 2.0;
            c = {1.0, tau, 1.0, 0.0, 0.0, 1.0, tau, 1.0};
        } else {
            double g1 = std::numbers::sqrt2;
            double g2 = 2.0 - g1;
            double g3 = g1 - 2.0;
            double g4 = 2.0 - 2.0 * g1;
            c = {1.0, g1, g2, g3, g4, g3, g2, g1, 1.0};
        }
        break;
    }
    case Family::F: {
        double a1 = -(2.0 * std::cos(2.0 * kPi / 7.0) + 2.0 * std::cos(6.0 * kPi / 7.0));
        double a2 = 2.0 + 2.0 * std::cos(4.0 * kPi / 7.0) + 2.0 * std::cos(6.0 * kPi / 7.0);
        c = {1.0, a1, a2, a1, 1.0};
        break;
    }
    case Family::G:
        c = {1.0, 0.0, 1.0};
        break;
    }
    return Poly(std::move(c));
}

} // namespace

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_LU(const Eigen::VectorXd& lambda,
                                                     const Eigen::MatrixXi& A) {
    instrument::bump("build_LU");
    const int n = static_cast<int>(A.rows());
    if (lambda.size() != n) throw NumericError("build_LU: lambda size mismatch");
    for (int i = 0; i < n; ++i) {
        if (lambda(i) == 0.0) throw NumericError("build_LU: lambda entries must be nonzero");
    }

    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd U = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        L(i, i) = lambda(i);
        U(i, i) = lambda(i);
        for (int j = 0; j < n; ++j) {
            if (i > j) L(i, j) = A(i, j);
            if (i < j) U(i, j) = A(i, j);
        }
    }
    return {L, U};
}

Eigen::MatrixXd M_matrix(const Eigen::VectorXd& lambda, const Eigen::MatrixXi& A) {
    instrument::bump("M_matrix");
    auto [L, U] = build_LU(lambda, A);
    // -L U^{-1} as the solution X of X U = -L, i.e. U^T X^T = -L^T.
    Eigen::MatrixXd Xt = U.transpose()
                             .triangularView<Eigen::Lower>()
                             .solve(Eigen::MatrixXd(-L.transpose()));
    return Xt.transpose();
}

Poly char_poly(const Eigen::MatrixXd& M) {
    instrument::bump("char_poly");
    const int n = static_cast<int>(M.rows());
    if (M.cols() != n) throw NumericError("char_poly: matrix not square");
    if (n < 1 || n > 16) {
        throw UnsupportedSizeError("char_poly: supported sizes are 1..16, got " +
                                   std::to_string(n));
    }
    return faddeev_leverrier(M);
}

Poly char_poly(const Eigen::VectorXd& lambda, const Eigen::MatrixXi& A) {
    const int n = static_cast<int>(A.rows());
    Poly direct = char_poly(M_matrix(lambda, A));

    auto [L, U] = build_LU(lambda, A);
    const std::complex<double> scale = lambda.prod();
    Eigen::MatrixXcd Lc = L.cast<std::complex<double>>();
    Eigen::MatrixXcd Uc = U.cast<std::complex<double>>();
    std::vector<std::complex<double>> values(n + 1);
    for (int k = 0; k <= n; ++k) {
        std::complex<double> x = std::polar(1.0, 2.0 * kPi * k / (n + 1));
        Eigen::MatrixXcd S = x * Uc + Lc;
        values[k] = S.partialPivLu().determinant() / scale;
    }
    Poly interpolated = interpolate_at_roots_of_unity(values);

    if (coeff_distance(direct, interpolated) > 1e-8) {
        throw InternalCheckError("char_poly: routes disagree; trace recursion " +
                                 coeff_list(direct) + " vs interpolation " +
                                 coeff_list(interpolated));
    }
    return direct;
}

Poly degree_poly(const roots::CartanSpec& spec) {
    instrument::bump("degree_poly");
    const int q = spec.coxeter_number + 2;

    std::vector<std::complex<double>> c{1.0};
    for (int d : spec.degrees) {
        std::complex<double> root = std::polar(1.0, 2.0 * kPi * d / q);
        c.push_back(c.back());
        for (int k = static_cast<int>(c.size()) - 2; k >= 1; --k) {
            c[k] = c[k - 1] - root * c[k];
        }
        c[0] *= -root;
    }

    std::vector<double> real(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (std::abs(c[k].imag()) > 1e-10) {
            throw InternalCheckError("degree_poly: residual imaginary part at coefficient " +
                                     std::to_string(k) + " for " + spec.name());
        }
        real[k] = c[k].real();
    }
    Poly product(std::move(real));

    Poly closed = closed_form_degree_poly(spec);
    if (coeff_distance(product, closed) > 1e-9) {
        throw InternalCheckError("degree_poly: closed form mismatch for " + spec.name() +
                                 "; product " + coeff_list(product) + " vs closed " +
                                 coeff_list(closed));
    }
    return product;
}

std::vector<int> exponents(const Poly& P, int q) {
    instrument::bump("exponents");
    if (q < 1) throw NumericError("exponents: modulus must be positive");

    std::vector<int> out;
    for (const auto& root : P.roots()) {
        double radius = std::abs(root);
        if (std::abs(radius - 1.0) > 1e-7) {
            throw NumericError("exponents: root " + report::format_double(root.real()) + "+" +
                               report::format_double(root.imag()) + "i is off the unit circle");
        }
        double angle = std::arg(root);  // (-pi, pi]
        double turns = angle * q / (2.0 * kPi);
        int m = static_cast<int>(std::lround(turns));
        double angular_error = std::abs(angle - 2.0 * kPi * m / q);
        if (angular_error > 1e-6) {
            throw NumericError("exponents: root at angle " + report::format_double(angle) +
                               " is " + report::format_double(angular_error) +
                               " rad from the nearest lattice angle (q=" + std::to_string(q) +
                               ")");
        }
        out.push_back(((m % q) + q) % q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Poly char_poly_at_fixed_point(const roots::CartanSpec& spec) {
    Eigen::VectorXd a = fixpoint::solve_a(spec);
    Eigen::VectorXd kappa = fixpoint::kappa_from_a(spec, a);
    return char_poly(kappa, spec.cartan);
}

Eigen::MatrixXd dt_A_log_jacobian(const roots::CartanSpec& spec, const Eigen::VectorXd& a,
                                  double step) {
    const int n = spec.rank;
    Eigen::VectorXd l = a.array().log();
    Eigen::MatrixXd J(n, n);
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd lp = l, lm = l;
        lp(j) += step;
        lm(j) -= step;
        Eigen::VectorXd fp =
            dtmap::dt_A(spec, {dtmap::Chart::XChartA, lp.array().exp()}).coords.array().log();
        Eigen::VectorXd fm =
            dtmap::dt_A(spec, {dtmap::Chart::XChartA, lm.array().exp()}).coords.array().log();
        J.col(j) = (fp - fm) / (2.0 * step);
    }
    return J;
}

Eigen::MatrixXd dt_X_log1p_jacobian(const roots::CartanSpec& spec, const Eigen::VectorXd& b,
                                    double step) {
    const int n = spec.rank;
    Eigen::VectorXd w = (b.array() + 1.0).log();
    auto image = [&](const Eigen::VectorXd& wv) {
        Eigen::VectorXd y = wv.array().exp() - 1.0;
        Eigen::VectorXd img = dtmap::dt_X(spec, {dtmap::Chart::YChartX, y}).coords;
        return Eigen::VectorXd((img.array() + 1.0).log());
    };
    Eigen::MatrixXd J(n, n);
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd wp = w, wm = w;
        wp(j) += step;
        wm(j) -= step;
        J.col(j) = (image(wp) - image(wm)) / (2.0 * step);
    }
    return J;
}

SpectralData spectral_data(const roots::CartanSpec& spec) {
    fixpoint::FixedPointData fp = fixpoint::fixed_point_data(spec);
    SpectralData data;
    data.M_kappa = M_matrix(fp.kappa, spec.cartan);
    data.P = char_poly(fp.kappa, spec.cartan);
    data.D = degree_poly(spec);
    data.exponent_list = exponents(data.P, spec.coxeter_number + 2);
    data.jacobian_log = dt_A_log_jacobian(spec, fp.a);
    return data;
}

report::Report verify_exponents_match_degrees(const roots::CartanSpec& spec) {
    instrument::bump("verify_exponents_match_degrees");
    report::Report rep("verify_exponents_match_degrees", spec.name());

    Poly P = char_poly_at_fixed_point(spec);
    Poly D = degree_poly(spec);
    rep.add_residual("char_poly_equals_degree_poly", coeff_distance(P, D), 1e-8);

    std::vector<int> expo = exponents(P, spec.coxeter_number + 2);
    rep.add_flag("exponents_equal_degrees", expo == spec.degrees);
    return rep;
}

report::Report jacobian_check(const roots::CartanSpec& spec) {
    instrument::bump("jacobian_check");
    report::Report rep("jacobian_check", spec.name());

    fixpoint::FixedPointData fp = fixpoint::fixed_point_data(spec);
    Eigen::MatrixXd M = M_matrix(fp.kappa, spec.cartan);
    Eigen::MatrixXd JA = dt_A_log_jacobian(spec, fp.a);
    Eigen::MatrixXd JX = dt_X_log1p_jacobian(spec, fp.b);

    double entry_dev = (JA - M.transpose()).cwiseAbs().maxCoeff();
    rep.add_residual("jacobian_A_equals_M_transpose", entry_dev, 1e-5);

    Poly P = char_poly(fp.kappa, spec.cartan);
    Poly PA = char_poly(JA);
    Poly PX = char_poly(JX);
    rep.add_residual("char_jacobian_A_vs_P", coeff_distance(PA, P), 1e-6);
    rep.add_residual("char_jacobian_X_vs_P", coeff_distance(PX, P), 1e-6);
    rep.add_residual("char_jacobian_A_vs_X", coeff_distance(PA, PX), 1e-6);
    return rep;
}

report::Report height_identity(const roots::CartanSpec& spec) {
    instrument::bump("height_identity");
    report::Report rep("height_identity", spec.name());

    const int n = spec.rank;
    const int q = spec.coxeter_number + 2;
    roots::RootSystem rs = roots::enumerate_positive_roots(spec);

    Poly lhs = poly_pow(cyclic_quotient(q), n);

    // Each positive root contributes the conjugate pair for heights
    // +ht and -ht, a real quadratic. Multiplying the quadratics out
    // coefficientwise is ill conditioned: partial products overshoot
    // the final coefficients by a factor of 1e8 around rank 12, so the
    // accumulated roundoff swamps the answer. On the unit circle the
    // product stays bounded by q^n, so evaluate the whole right side
    // pointwise at roots of unity and recover the coefficients with
    // the inverse transform instead.
    const Poly d_poly = degree_poly(spec);
    const int m = n * (q - 1) + 1;
    std::vector<std::complex<double>> values(m);
    for (int k = 0; k < m; ++k) {
        std::complex<double> z = std::polar(1.0, 2.0 * kPi * k / m);
        std::complex<double> v = d_poly.eval(z);
        for (int ht : rs.heights) {
            double c = 2.0 * std::cos(2.0 * kPi * ht / q);
            v *= (z - c) * z + 1.0;
        }
        values[k] = v;
    }
    Poly rhs = interpolate_at_roots_of_unity(values);

    rep.add_flag("degree_matches", lhs.degree() == rhs.degree());
    rep.add_residual("height_factorization", scaled_coeff_distance(lhs, rhs), 1e-7);
    return rep;
}

report::Report coxeter_spectrum(const roots::CartanSpec& spec) {
    instrument::bump("coxeter_spectrum");
    report::Report rep("coxeter_spectrum", spec.name());

    Eigen::VectorXd ones = Eigen::VectorXd::Ones(spec.rank);
    Poly P1 = char_poly(ones, spec.cartan);
    std::vector<int> expo = exponents(P1, spec.coxeter_number);

    std::vector<int> expected;
    for (int d : spec.degrees) expected.push_back(d - 1);
    rep.add_flag("coxeter_exponents_equal_degrees_minus_one", expo == expected);
    return rep;
}

} // namespace clusterdt::spectrum
