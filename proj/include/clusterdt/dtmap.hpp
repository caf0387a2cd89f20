#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "clusterdt/cartan.hpp"

namespace clusterdt::dtmap {

/// Coordinate charts a PositivePoint can live in: cluster values on the
/// A-side, global Y-values on the X-side, or the (q, p) chart of the
/// tridiagonal model.
enum class Chart { XChartA, YChartX, QPChartBruhat };

struct PositivePoint {
    Chart chart = Chart::XChartA;
    Eigen::VectorXd coords;
};

/// Validating constructor; throws when a coordinate is not positive.
PositivePoint make_point(Chart chart, Eigen::VectorXd coords);

/// One step of the transformation on the x-chart.  The image is computed
/// sequentially: for i = 1..n the exchange relation
///   x_i * x'_i = 1 + prod_{j>i} x_j^{-a(j,i)} * prod_{j<i} x'_j^{-a(j,i)}
/// determines x'_i from the already-computed earlier image coordinates.
PositivePoint dt_A(const roots::CartanSpec& spec, const PositivePoint& pt);

/// One step of the transformation on the Y-chart:
///   Y_i * Y'_i = prod_{j>i} (1+Y_j)^{-a(j,i)} * prod_{j<i} (1+Y'_j)^{-a(j,i)}.
PositivePoint dt_X(const roots::CartanSpec& spec, const PositivePoint& pt);

/// The ensemble map from the x-chart to the Y-chart: Y_i = x_i x'_i - 1
/// with x' the dt_A image.  The equivalent monomial expression
/// prod_{j>i} x_j^{-a(j,i)} prod_{j<i} x'_j^{-a(j,i)} is evaluated as a
/// cross-check; disagreement beyond 1e-10 (relative) is an internal error.
PositivePoint ensemble_p(const roots::CartanSpec& spec, const PositivePoint& pt);

enum class FriezeKind { XFrieze, YFrieze };

/// A window of a frieze: rows indexed by m in [m0, m1], each row a
/// positive n-vector.  Row m+1 is the transformation image of row m.
struct FriezeTable {
    FriezeKind kind = FriezeKind::XFrieze;
    int n = 0;
    int m0 = 0;
    int m1 = 0;
    std::vector<Eigen::VectorXd> rows;

    // i is 1-based, m in [m0, m1].
    double value(int i, int m) const { return rows[m - m0](i - 1); }
};

/// Fill a frieze window from a seed row at m = 0.  Rows above 0 are
/// generated forward; rows below 0 solve the recurrence for the
/// smaller-m unknown (backward sweep i = n..1).
FriezeTable frieze(const roots::CartanSpec& spec, FriezeKind kind, const PositivePoint& seed_pt,
                   int m0, int m1);

/// Largest relative recurrence residual over the whole window; the
/// construction keeps this at roundoff level, and tests pin it.
double frieze_residual(const roots::CartanSpec& spec, const FriezeTable& table);

/// Number of distinct values in rows m = 0 .. h+1 (one full period),
/// where two values are identified when they agree within `threshold`
/// relatively.
int distinct_frieze_values(const roots::CartanSpec& spec, const FriezeTable& table,
                           double threshold = 1e-6);

enum class DTKind { A, X };

/// Outcome of the periodicity experiment: iterate the chosen map h+2
/// times from random positive points and measure the worst relative
/// deviation from the start; for types whose longest Weyl element is -Id
/// the half period (h+2)/2 is measured as well.
struct PeriodicityResult {
    int trials = 0;
    std::uint64_t rng_seed = 0;
    int period = 0;
    double max_rel_error_full = 0.0;
    bool half_checked = false;
    int half_period = 0;
    double max_rel_error_half = 0.0;
};

PeriodicityResult check_periodicity(const roots::CartanSpec& spec, DTKind kind, int trials,
                                    std::uint64_t rng_seed);

/// Superunitarity at the fixed point: every x-frieze entry over a full
/// period must exceed 1.  min_entry reports the worst entry.
struct SuperunitaryResult {
    bool all_above_one = false;
    double min_entry = 0.0;
};

SuperunitaryResult superunitary_check(const roots::CartanSpec& spec);

/// Coordinates drawn log-uniformly from [1/e, e]; the sampler used by
/// every randomized check in the library.
Eigen::VectorXd random_log_uniform(int n, std::mt19937_64& rng);

} // namespace clusterdt::dtmap
