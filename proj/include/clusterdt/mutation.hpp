#pragma once

#include <utility>

#include <Eigen/Core>

#include "clusterdt/cartan.hpp"

namespace clusterdt::mutation {

/// Exchange data of a seed: an (n+m) x n integer matrix whose top n x n
/// block is skew-symmetrizable.  Rows n+1 .. n+m describe how the frozen
/// variables enter the exchange relations.
struct ExtendedMatrix {
    int n = 0;   // mutable directions
    int m = 0;   // frozen rows
    Eigen::MatrixXi entries;  // (n+m) x n

    Eigen::MatrixXi principal() const { return entries.topRows(n); }
    Eigen::MatrixXi frozen() const { return entries.bottomRows(m); }
};

/// A seed with numeric variable values: positive cluster values x and
/// positive frozen values p.
struct NumericSeed {
    ExtendedMatrix b;
    Eigen::VectorXd x;  // size n, strictly positive
    Eigen::VectorXd p;  // size m, strictly positive
};

/// Matrix mutation in direction k (1-based, k in [1, n]): sign flip on
/// row and column k, and the usual positive-part correction elsewhere.
/// An involution.
ExtendedMatrix mutate_matrix(const ExtendedMatrix& b, int k);

/// Seed mutation in direction k: replaces x_k by the exchange value
/// x_k^{-1} (prod x_j^{[b_{j,k}]_+} + prod x_j^{[-b_{j,k}]_+}), where the
/// products run over mutable and frozen variables alike, and mutates the
/// matrix.  Subtraction-free, so positivity is preserved structurally.
NumericSeed mutate_x(const NumericSeed& seed, int k);

/// Mutation of Y-variables attached to a square exchange matrix B:
/// y'_k = 1/y_k and y'_i = y_i y_k^{[b_{k,i}]_+} (1+y_k)^{-b_{k,i}} for
/// i != k.  Returns the new values together with the mutated matrix.
std::pair<Eigen::VectorXd, Eigen::MatrixXi> mutate_y(const Eigen::VectorXd& y,
                                                     const Eigen::MatrixXi& B, int k);

/// The exchange matrix attached to a Cartan matrix: zero diagonal,
/// b_{i,j} = a_{i,j} above the diagonal and -a_{i,j} below it.  With
/// `principal_coefficients` an identity block is appended as frozen rows.
ExtendedMatrix build_BA(const roots::CartanSpec& spec, bool principal_coefficients = false);

/// Applies mutations 1, 2, ..., n (direction 1 first) to the exchange
/// matrix with principal coefficients and checks that the result is the
/// original matrix with the coefficient block negated.  This is the
/// green-to-red property that pins down the transformation the rest of
/// the library computes.  A false return signals an implementation bug.
bool verify_reddening(const roots::CartanSpec& spec);

/// Cartan companion of a skew-symmetrizable matrix: 2 on the diagonal,
/// -|b_{i,j}| off it.
Eigen::MatrixXi cartan_companion(const Eigen::MatrixXi& B);

/// Whether D*B is skew-symmetric for the symmetrizer D of the Cartan
/// companion of B.
bool is_skew_symmetrizable(const Eigen::MatrixXi& B);

} // namespace clusterdt::mutation
