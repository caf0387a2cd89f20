#include "clusterdt/dtmap.hpp"

#include <cmath>
#include <string>

#include "clusterdt/errors.hpp"
#include "clusterdt/fixpoint.hpp"
#include "clusterdt/instrument.hpp"

namespace clusterdt::dtmap {

namespace {

using roots::CartanSpec;

void require_chart(const PositivePoint& pt, Chart chart, int n, const char* where) {
    if (pt.chart != chart) throw Error(std::string(where) + ": point is in the wrong chart");
    if (pt.coords.size() != n) {
        throw Error(std::string(where) + ": expected " + std::to_string(n) + " coordinates, got " +
                    std::to_string(pt.coords.size()));
    }
    if (pt.coords.minCoeff() <= 0.0) {
        throw NumericError(std::string(where) + ": coordinates must be strictly positive");
    }
}

// prod_{j>i} prev_j^{-a(j,i)} * prod_{j<i} next_j^{-a(j,i)}; `prev` is the
// current row and `next` the partially built image row.  Shared by the
// x- and Y-side recurrences (the Y-side passes 1+Y values).
double mixed_product(const CartanSpec& spec, const Eigen::VectorXd& prev,
                     const Eigen::VectorXd& next, int i) {
    double prod = 1.0;
    for (int j = 0; j < spec.rank; ++j) {
        if (j == i) continue;
        int e = -spec.cartan(j, i);
        if (e == 0) continue;
        double base = j > i ? prev(j) : next(j);
        prod *= std::pow(base, static_cast<double>(e));
    }
    return prod;
}

Eigen::VectorXd dt_A_coords(const CartanSpec& spec, const Eigen::VectorXd& x) {
    const int n = spec.rank;
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) {
        out(i) = (1.0 + mixed_product(spec, x, out, i)) / x(i);
    }
    return out;
}

Eigen::VectorXd dt_X_coords(const CartanSpec& spec, const Eigen::VectorXd& y) {
    const int n = spec.rank;
    Eigen::VectorXd out(n);
    Eigen::VectorXd prev = y.array() + 1.0;
    Eigen::VectorXd next(n);
    for (int i = 0; i < n; ++i) {
        out(i) = mixed_product(spec, prev, next, i) / y(i);
        next(i) = 1.0 + out(i);
    }
    return out;
}

double max_rel_deviation(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    return ((u - v).cwiseQuotient(v)).cwiseAbs().maxCoeff();
}

} // namespace

PositivePoint make_point(Chart chart, Eigen::VectorXd coords) {
    if (coords.size() == 0 || coords.minCoeff() <= 0.0) {
        throw NumericError("make_point: coordinates must be strictly positive");
    }
    return PositivePoint{chart, std::move(coords)};
}

PositivePoint dt_A(const roots::CartanSpec& spec, const PositivePoint& pt) {
    instrument::bump("dt_A");
    require_chart(pt, Chart::XChartA, spec.rank, "dt_A");
    return PositivePoint{Chart::XChartA, dt_A_coords(spec, pt.coords)};
}

PositivePoint dt_X(const roots::CartanSpec& spec, const PositivePoint& pt) {
    instrument::bump("dt_X");
    require_chart(pt, Chart::YChartX, spec.rank, "dt_X");
    return PositivePoint{Chart::YChartX, dt_X_coords(spec, pt.coords)};
}

PositivePoint ensemble_p(const roots::CartanSpec& spec, const PositivePoint& pt) {
    instrument::bump("ensemble_p");
    require_chart(pt, Chart::XChartA, spec.rank, "ensemble_p");
    const int n = spec.rank;
    const Eigen::VectorXd& x = pt.coords;
    Eigen::VectorXd image = dt_A_coords(spec, x);

    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        double subtracted = x(i) * image(i) - 1.0;
        double monomial = mixed_product(spec, x, image, i);
        if (std::abs(subtracted - monomial) > 1e-10 * std::max(1.0, std::abs(monomial))) {
            throw InternalCheckError("ensemble_p: exchange forms disagree at i=" +
                                     std::to_string(i + 1) + " for " + spec.name());
        }
        if (monomial <= 0.0) {
            throw InternalCheckError("ensemble_p: nonpositive Y coordinate");
        }
        y(i) = monomial;
    }
    return PositivePoint{Chart::YChartX, std::move(y)};
}

FriezeTable frieze(const roots::CartanSpec& spec, FriezeKind kind, const PositivePoint& seed_pt,
                   int m0, int m1) {
    instrument::bump("frieze");
    require_chart(seed_pt, kind == FriezeKind::XFrieze ? Chart::XChartA : Chart::YChartX,
                  spec.rank, "frieze");
    if (m0 > 0 || m1 < 0 || m0 > m1) {
        throw Error("frieze: window must contain the seed row m=0");
    }
    const int n = spec.rank;

    FriezeTable table;
    table.kind = kind;
    table.n = n;
    table.m0 = m0;
    table.m1 = m1;
    table.rows.assign(m1 - m0 + 1, Eigen::VectorXd());
    table.rows[-m0] = seed_pt.coords;

    auto forward = [&](const Eigen::VectorXd& row) {
        return kind == FriezeKind::XFrieze ? dt_A_coords(spec, row) : dt_X_coords(spec, row);
    };
    for (int m = 1; m <= m1; ++m) {
        table.rows[m - m0] = forward(table.rows[m - 1 - m0]);
    }

    // Backward rows: with row m+1 known, sweep i = n..1 and solve the
    // recurrence for the row-m entry; indices j > i already hold row-m
    // values while j < i read row m+1.
    for (int m = -1; m >= m0; --m) {
        const Eigen::VectorXd& above = table.rows[m + 1 - m0];
        Eigen::VectorXd row(n);
        for (int i = n - 1; i >= 0; --i) {
            if (kind == FriezeKind::XFrieze) {
                double prod = 1.0;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    int e = -spec.cartan(j, i);
                    if (e == 0) continue;
                    prod *= std::pow(j > i ? row(j) : above(j), static_cast<double>(e));
                }
                row(i) = (1.0 + prod) / above(i);
            } else {
                double prod = 1.0;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    int e = -spec.cartan(j, i);
                    if (e == 0) continue;
                    prod *= std::pow(1.0 + (j > i ? row(j) : above(j)), static_cast<double>(e));
                }
                row(i) = prod / above(i);
            }
        }
        table.rows[m - m0] = std::move(row);
    }

    for (const auto& row : table.rows) {
        if (row.minCoeff() <= 0.0) throw NumericError("frieze: window left the positive orthant");
    }
    return table;
}

double frieze_residual(const roots::CartanSpec& spec, const FriezeTable& table) {
    const int n = spec.rank;
    double worst = 0.0;
    for (int m = table.m0; m < table.m1; ++m) {
        const Eigen::VectorXd& row = table.rows[m - table.m0];
        const Eigen::VectorXd& above = table.rows[m + 1 - table.m0];
        for (int i = 0; i < n; ++i) {
            double prod = 1.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                int e = -spec.cartan(j, i);
                if (e == 0) continue;
                double base = j > i ? row(j) : above(j);
                if (table.kind == FriezeKind::YFrieze) base += 1.0;
                prod *= std::pow(base, static_cast<double>(e));
            }
            double rhs = table.kind == FriezeKind::XFrieze ? 1.0 + prod : prod;
            worst = std::max(worst, std::abs(row(i) * above(i) - rhs) / rhs);
        }
    }
    return worst;
}

int distinct_frieze_values(const roots::CartanSpec& spec, const FriezeTable& table,
                           double threshold) {
    const int h = spec.coxeter_number;
    if (table.m0 > 0 || table.m1 < h + 1) {
        throw Error("distinct_frieze_values: window must cover m in [0, h+1]");
    }
    std::vector<double> values;
    for (int m = 0; m <= h + 1; ++m) {
        const Eigen::VectorXd& row = table.rows[m - table.m0];
        for (int i = 0; i < table.n; ++i) values.push_back(row(i));
    }
    std::sort(values.begin(), values.end());
    int distinct = values.empty() ? 0 : 1;
    for (std::size_t k = 1; k < values.size(); ++k) {
        if (values[k] - values[k - 1] > threshold * std::max(1.0, std::abs(values[k]))) {
            ++distinct;
        }
    }
    return distinct;
}

Eigen::VectorXd random_log_uniform(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = std::exp(unif(rng));
    return v;
}

PeriodicityResult check_periodicity(const roots::CartanSpec& spec, DTKind kind, int trials,
                                    std::uint64_t rng_seed) {
    instrument::bump("check_periodicity");
    if (trials < 1) throw Error("check_periodicity: trials must be >= 1");
    const int n = spec.rank;
    const int period = spec.coxeter_number + 2;

    PeriodicityResult result;
    result.trials = trials;
    result.rng_seed = rng_seed;
    result.period = period;
    result.half_checked = spec.minus_one;
    result.half_period = period / 2;

    std::mt19937_64 rng(rng_seed);
    for (int t = 0; t < trials; ++t) {
        Eigen::VectorXd start = random_log_uniform(n, rng);
        Eigen::VectorXd z = start;
        for (int step = 1; step <= period; ++step) {
            z = kind == DTKind::A ? dt_A_coords(spec, z) : dt_X_coords(spec, z);
            if (result.half_checked && step == result.half_period) {
                result.max_rel_error_half =
                    std::max(result.max_rel_error_half, max_rel_deviation(z, start));
            }
        }
        result.max_rel_error_full =
            std::max(result.max_rel_error_full, max_rel_deviation(z, start));
    }
    return result;
}

SuperunitaryResult superunitary_check(const roots::CartanSpec& spec) {
    instrument::bump("superunitary_check");
    Eigen::VectorXd a = fixpoint::solve_a(spec);
    FriezeTable table = frieze(spec, FriezeKind::XFrieze,
                               PositivePoint{Chart::XChartA, a}, 0, spec.coxeter_number + 2);
    double min_entry = table.rows.front().minCoeff();
    for (const auto& row : table.rows) min_entry = std::min(min_entry, row.minCoeff());

    SuperunitaryResult result;
    result.min_entry = min_entry;
    result.all_above_one = min_entry > 1.0;
    return result;
}

} // namespace clusterdt::dtmap
