#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace clusterdt::roots {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family family);

/// A finite indecomposable Cartan type together with the frozen data the
/// rest of the library keys off: the Cartan matrix under the vertex
/// labeling used throughout, the Coxeter number, the Weyl-group degrees,
/// and whether the longest Weyl element acts as -Id on the roots.
struct CartanSpec {
    Family family;
    int rank = 0;
    Eigen::MatrixXi cartan;      // a(i,j), 0-based storage
    int coxeter_number = 0;
    std::vector<int> degrees;    // sorted ascending, size == rank
    bool minus_one = false;

    std::string name() const;    // "A3", "G2", ...
};

/// Build the CartanSpec for a supported type.
///
/// Supported ranks: A_1..A_12, B_2..B_8, C_3..C_8, D_4..D_8, E_6..E_8,
/// F_4, G_2.  Anything else throws InvalidTypeError.
CartanSpec cartan_matrix(Family family, int rank);

/// Parse a type name such as "A3", "b2" or "E_8" (case-insensitive,
/// optional underscore) and build its CartanSpec.
CartanSpec parse_type(std::string_view name);

/// All supported types in canonical order (A ascending, then B, C, D,
/// E, F, G).
std::vector<CartanSpec> all_supported();

/// Minimal positive integer diagonal D with D*A symmetric.  Throws
/// InternalCheckError if no such diagonal exists (never for a valid
/// Cartan matrix).
Eigen::VectorXi symmetrizer(const Eigen::MatrixXi& cartan);

/// Positive roots in simple-root coordinates, ordered by height and
/// discovery; heights[k] is the coordinate sum of positive_roots[k].
struct RootSystem {
    int simple_rank = 0;
    std::vector<Eigen::VectorXi> positive_roots;
    std::vector<int> heights;
};

/// Enumerate the positive roots by breadth-first closure over root
/// strings.  The result is checked against the cardinality n*h/2 before
/// it is returned.
RootSystem enumerate_positive_roots(const CartanSpec& spec);

/// One row of Kostant's height partition: lhs counts degrees >= j+1,
/// rhs counts positive roots of height j.  The two agree for every j;
/// callers assert the equality.
struct KostantRow {
    int j = 0;
    int lhs = 0;
    int rhs = 0;
};

/// Rows for j = 1 .. h+1 (the last two rows are identically (j, 0, 0)).
std::vector<KostantRow> kostant_counts(const CartanSpec& spec, const RootSystem& roots);

/// Exact counts attached to a type: the number of cluster variables
/// (sum of degrees, equivalently n·h/2 + n) and the number of clusters
/// (the product of (d_i + h)/d_i, evaluated in exact rational
/// arithmetic and asserted to be an integer).
struct CountData {
    long long num_cluster_vars = 0;
    long long num_clusters = 0;
};

CountData count_formulas(const CartanSpec& spec);

} // namespace clusterdt::roots
