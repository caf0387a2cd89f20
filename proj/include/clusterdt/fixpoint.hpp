#pragma once

#include <Eigen/Core>

#include "clusterdt/cartan.hpp"

namespace clusterdt::fixpoint {

/// The distinguished positive fixed point of a type and its derived
/// quantities: a on the x-side, b = a^2 - 1 on the Y-side, the
/// multiplier vector kappa and its reciprocal u.
struct FixedPointData {
    Eigen::VectorXd a;
    Eigen::VectorXd b;
    Eigen::VectorXd kappa;
    Eigen::VectorXd u;
};

/// Solve a_i^2 = 1 + prod_{j != i} a_j^{-a_{j,i}} for the unique positive
/// solution.  Starts every coordinate at sqrt(2) (the decoupled value) and
/// sweeps Gauss-Seidel style with the sqrt update; if that fails to reach
/// `tol` (max relative update) within `max_iter` sweeps, falls back to a
/// damped Newton iteration in log-coordinates.  Throws NumericError if
/// both phases fail.
Eigen::VectorXd solve_a(const roots::CartanSpec& spec, double tol = 1e-13, int max_iter = 500);

/// Damped Newton in log-coordinates from an arbitrary positive start.
/// Used directly by the uniqueness probe; solve_a calls it as a fallback.
Eigen::VectorXd newton_from(const roots::CartanSpec& spec, const Eigen::VectorXd& start,
                            double tol = 1e-13, int max_iter = 200);

/// Closed-form fixed point per family: sine ratios for A_n and C_n,
/// integer-plus-sqrt tuples for B_n, D_n, E_7 and E_8, and expressions in
/// the cubic unit eps for E_6 and F_4 (see epsilon_cubic_root).
Eigen::VectorXd closed_form_a(const roots::CartanSpec& spec);

/// The unique real root in (2, 3) of e^3 - 2e^2 - e + 1, by bisection to
/// 1e-14.  Parametrizes the E_6 and F_4 fixed points.
double epsilon_cubic_root();

/// b_i = a_i^2 - 1.  Requires every a_i > 1.
Eigen::VectorXd b_from_a(const Eigen::VectorXd& a);

/// kappa_i computed three ways: a_i^2/(a_i^2-1), (b_i+1)/b_i and the
/// monomial prod_j a_j^{a_{j,i}}.  The three must agree; the maximal
/// pairwise disagreement is written to `*disagreement` when given, and a
/// gross mismatch (beyond 1e-8) throws InternalCheckError.
Eigen::VectorXd kappa_from_a(const roots::CartanSpec& spec, const Eigen::VectorXd& a,
                             double* disagreement = nullptr);

/// kappa_i = (b_i + 1)/b_i from the Y-side fixed point alone.
Eigen::VectorXd kappa_from_b(const Eigen::VectorXd& b);

/// u = 1/kappa, componentwise; each u_i must land in (0, 1).
Eigen::VectorXd u_from_kappa(const Eigen::VectorXd& kappa);

/// Vinberg-style finiteness gate: true iff every entry of the row vector
/// log(a) * A is strictly positive.  At the true fixed point this vector
/// is log(kappa), so the gate certifies kappa > 1.
bool vinberg_gate(const Eigen::MatrixXi& A, const Eigen::VectorXd& a);

/// Convenience bundle: solve for a and derive b, kappa, u.
FixedPointData fixed_point_data(const roots::CartanSpec& spec);

/// Residuals of the two defining systems at (a, b); used by tests and
/// reports.  Componentwise gaps of the squared equations, scaled by the
/// magnitude of the terms (plain absolute gaps when the terms are < 1).
double residual_a(const roots::CartanSpec& spec, const Eigen::VectorXd& a);
double residual_b(const roots::CartanSpec& spec, const Eigen::VectorXd& b);

/// Max absolute residual of u_i^2 = prod_j (1 - u_j)^{a_{j,i}}.
double residual_u(const roots::CartanSpec& spec, const Eigen::VectorXd& u);

} // namespace clusterdt::fixpoint
