#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "clusterdt/report.hpp"

namespace clusterdt::bruhat {

/// Tridiagonal matrix of size (n+1) x (n+1) with free diagonal q, free
/// superdiagonal p and subdiagonal fixed at 1.  The model consists of
/// such matrices with determinant 1.
struct TriDiag {
    Eigen::VectorXd q;  // n+1 entries
    Eigen::VectorXd p;  // n entries, all nonzero

    int n() const { return static_cast<int>(p.size()); }
    Eigen::MatrixXd matrix() const;
};

/// Leading principal minors phi_0 .. phi_{n+1} by the three-term
/// recursion phi_j = q_j phi_{j-1} - p_{j-1} phi_{j-2}; the last entry is
/// det(g).
Eigen::VectorXd continuants(const TriDiag& g);

double det_via_continuants(const TriDiag& g);

/// The twist on the p = 1 slice, acting on the diagonal vector alone:
/// (q_1, ..., q_{n+1}) -> (q_2, ..., q_{n+1}, phi_n(q_1..q_n)).  Input
/// must satisfy the determinant constraint q_{n+1} phi_n - phi_{n-1} = 1
/// to 1e-8; the output satisfies it again (asserted).
Eigen::VectorXd twist_Q(int n, const Eigen::VectorXd& q_vec);

/// The twist on the full (q, p) chart: entries shift down by one, the
/// last p becomes the reciprocal of the p-product, and the last diagonal
/// entry is the unique value restoring det = 1 (linear via the continuant
/// expansion).  Throws NumericError when the relevant continuant
/// vanishes (outside the totally positive part) and on det(g) != 1.
TriDiag twist_full(const TriDiag& g);

/// Values v_0 .. v_k of the constant-diagonal continuants at q:
/// v_0 = 1, v_1 = q, v_j = q v_{j-1} - v_{j-2}.
std::vector<double> vieta_values(double q, int k);

/// Candidate diagonal values for fixed points of the p = 1 twist: the
/// members of the two cosine families that actually satisfy
/// v_{n+1}(q) = 1 to 1e-10, deduplicated, sorted descending.
std::vector<double> vieta_fixed_candidates(int n);

/// Brute-force total nonnegativity: every minor of the (n+1) x (n+1)
/// matrix is >= -1e-10.  Supported for n <= 6 only.
bool tnn_check(const TriDiag& g);

/// The distinguished fixed point: constant diagonal 2*cos(pi/(n+3)) and
/// p = 1.
TriDiag model_fixed_point(int n);

/// Log-linear matrix of the frozen shift (p_1..p_n) -> (p_2, ..., p_n,
/// 1/(p_1...p_n)); its characteristic polynomial is 1 + x + ... + x^n.
Eigen::MatrixXd frozen_action_matrix(int n);

/// Spectrum of the twist linearized at the fixed point, in the
/// 2n-dimensional (q_1..q_n, p_1..p_n) chart with the last diagonal
/// entry recovered from det = 1.  Checks the characteristic polynomial
/// against the product of the type-A_n polynomial and 1 + x + ... + x^n,
/// plus the two restricted spectra.  n <= 8.
report::Report twist_spectrum(int n);

/// Orbit-closure experiment for the full twist on random positive
/// det-1 tridiagonals near the fixed point.  The p = 1 slice closes
/// after n+3 steps and the p-part after n+1 steps; the full state
/// returns to a diagonal rescaling of itself after n+3 steps, which is
/// verified by fitting the rescaling from the q-ratios and checking it
/// acts consistently on every coordinate.  The plain product of the
/// diagonal entries is invariant under such rescalings and must return
/// exactly.
report::Report period_check_full(int n, int trials, std::uint64_t rng_seed);

} // namespace clusterdt::bruhat
