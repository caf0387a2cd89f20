#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "clusterdt/cartan.hpp"
#include "clusterdt/poly.hpp"
#include "clusterdt/report.hpp"

namespace clusterdt::spectrum {

/// Triangular factors attached to a multiplier vector: U carries lambda
/// on the diagonal and the Cartan entries strictly above it, L carries
/// lambda on the diagonal and the Cartan entries strictly below.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_LU(const Eigen::VectorXd& lambda,
                                                     const Eigen::MatrixXi& A);

/// M_lambda = -L_lambda * U_lambda^{-1}, via a triangular solve.
Eigen::MatrixXd M_matrix(const Eigen::VectorXd& lambda, const Eigen::MatrixXi& A);

/// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier trace
/// recursion.  Supported up to n = 16.
Poly char_poly(const Eigen::MatrixXd& M);

/// Characteristic polynomial of M_lambda computed along two independent
/// routes: the trace recursion on M_lambda, and evaluation of
/// det(xU + L)/prod(lambda) at the n+1 roots of unity followed by
/// interpolation (the inverse discrete Fourier transform).  The two must
/// agree to 1e-8 coefficientwise; disagreement throws InternalCheckError
/// carrying both coefficient lists.
Poly char_poly(const Eigen::VectorXd& lambda, const Eigen::MatrixXi& A);

/// The degree polynomial of a type: prod_j (x - zeta^{d_j}) with
/// zeta = exp(2*pi*i/(h+2)).  Built as a complex product, checked against
/// the per-family closed form to 1e-9, imaginary parts verified below
/// 1e-10 and dropped.
Poly degree_poly(const roots::CartanSpec& spec);

/// Read off integers m with roots of P equal to exp(2*pi*i*m/q).  Every
/// root must sit on the unit circle (|r| - 1 within 1e-7) and within
/// 1e-6 radians of its matched angle; violations throw NumericError
/// naming the root.  Returns the sorted multiset.
std::vector<int> exponents(const Poly& P, int q);

/// P at the distinguished fixed point: char_poly(kappa, A) with kappa
/// derived from the solved fixed point.
Poly char_poly_at_fixed_point(const roots::CartanSpec& spec);

/// Central-difference Jacobian of l -> log(dt_A(exp l)) at log a.
Eigen::MatrixXd dt_A_log_jacobian(const roots::CartanSpec& spec, const Eigen::VectorXd& a,
                                  double step = 1e-6);

/// Central-difference Jacobian of w -> log(1 + dt_X(exp(w) - 1)) at
/// w = log(1 + b), the Y-side chart in which the linearization matches
/// the x-side one.
Eigen::MatrixXd dt_X_log1p_jacobian(const roots::CartanSpec& spec, const Eigen::VectorXd& b,
                                    double step = 1e-6);

/// Everything the spectral commands print.
struct SpectralData {
    Eigen::MatrixXd M_kappa;
    Poly P;                      // char poly of the linearization
    Poly D;                      // degree polynomial
    std::vector<int> exponent_list;
    Eigen::MatrixXd jacobian_log;
};

SpectralData spectral_data(const roots::CartanSpec& spec);

/// Checks P = D (coefficientwise, 1e-8) and exponents(P, h+2) = degrees.
report::Report verify_exponents_match_degrees(const roots::CartanSpec& spec);

/// Checks the finite-difference linearizations: J_A against M_kappa^T
/// entrywise (1e-5), and the characteristic polynomials of J_A and J_X
/// against P and each other (1e-6).
report::Report jacobian_check(const roots::CartanSpec& spec);

/// Checks ((x^{h+2}-1)/(x-1))^n = D(x) * prod_{beta} (x - zeta^{ht beta})
/// over all roots, negative roots entering through conjugate factors.
/// Residual is the scaled coefficientwise distance (1e-7).
report::Report height_identity(const roots::CartanSpec& spec);

/// Checks exponents(char_poly(M_1), h) = degrees - 1.
report::Report coxeter_spectrum(const roots::CartanSpec& spec);

} // namespace clusterdt::spectrum
