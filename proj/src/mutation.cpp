#include "clusterdt/mutation.hpp"

#include <cmath>
#include <cstdlib>

#include "clusterdt/errors.hpp"
#include "clusterdt/instrument.hpp"

namespace clusterdt::mutation {

namespace {

int pos(int v) { return v > 0 ? v : 0; }

// Integer power of a positive double; exponents here are small Cartan
// entries, so repeated multiplication is exact enough and avoids pow().
double ipow(double base, int e) {
    if (e == 0) return 1.0;
    double acc = 1.0;
    int r = std::abs(e);
    for (int i = 0; i < r; ++i) acc *= base;
    return e > 0 ? acc : 1.0 / acc;
}

void check_direction(int k, int n) {
    if (k < 1 || k > n) {
        throw Error("mutation direction " + std::to_string(k) + " out of range [1, " +
                    std::to_string(n) + "]");
    }
}

} // namespace

ExtendedMatrix mutate_matrix(const ExtendedMatrix& b, int k) {
    instrument::bump("mutate_matrix");
    check_direction(k, b.n);
    const int rows = b.n + b.m;
    const int cols = b.n;
    const int kk = k - 1;

    ExtendedMatrix out = b;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (i == kk || j == kk) {
                out.entries(i, j) = -b.entries(i, j);
            } else {
                out.entries(i, j) = b.entries(i, j) +
                                    pos(b.entries(i, kk)) * pos(b.entries(kk, j)) -
                                    pos(-b.entries(i, kk)) * pos(-b.entries(kk, j));
            }
        }
    }
    return out;
}

NumericSeed mutate_x(const NumericSeed& seed, int k) {
    instrument::bump("mutate_x");
    check_direction(k, seed.b.n);
    const int n = seed.b.n;
    const int m = seed.b.m;
    const int kk = k - 1;

    auto value = [&](int j) { return j < n ? seed.x(j) : seed.p(j - n); };

    double plus = 1.0, minus = 1.0;
    for (int j = 0; j < n + m; ++j) {
        int bjk = seed.b.entries(j, kk);
        plus *= ipow(value(j), pos(bjk));
        minus *= ipow(value(j), pos(-bjk));
    }

    NumericSeed out = seed;
    out.x(kk) = (plus + minus) / seed.x(kk);
    out.b = mutate_matrix(seed.b, k);
    return out;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXi> mutate_y(const Eigen::VectorXd& y,
                                                     const Eigen::MatrixXi& B, int k) {
    instrument::bump("mutate_y");
    const int n = static_cast<int>(y.size());
    if (B.rows() != n || B.cols() != n) throw Error("mutate_y: matrix/vector size mismatch");
    check_direction(k, n);
    const int kk = k - 1;

    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) {
        if (i == kk) {
            out(i) = 1.0 / y(kk);
        } else {
            int bki = B(kk, i);
            out(i) = y(i) * ipow(y(kk), pos(bki)) * ipow(1.0 + y(kk), -bki);
        }
    }

    ExtendedMatrix wrap{n, 0, B};
    Eigen::MatrixXi Bout = mutate_matrix(wrap, k).entries;
    return {out, Bout};
}

ExtendedMatrix build_BA(const roots::CartanSpec& spec, bool principal_coefficients) {
    instrument::bump("build_BA");
    const int n = spec.rank;
    ExtendedMatrix out;
    out.n = n;
    out.m = principal_coefficients ? n : 0;
    out.entries = Eigen::MatrixXi::Zero(n + out.m, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i < j) out.entries(i, j) = spec.cartan(i, j);
            else if (i > j) out.entries(i, j) = -spec.cartan(i, j);
        }
    }
    if (principal_coefficients) {
        out.entries.bottomRows(n) = Eigen::MatrixXi::Identity(n, n);
    }
    return out;
}

bool verify_reddening(const roots::CartanSpec& spec) {
    instrument::bump("verify_reddening");
    const int n = spec.rank;
    ExtendedMatrix b = build_BA(spec, true);
    const Eigen::MatrixXi start = b.entries;

    for (int k = 1; k <= n; ++k) b = mutate_matrix(b, k);

    Eigen::MatrixXi expected = start;
    expected.bottomRows(n) = -Eigen::MatrixXi::Identity(n, n);
    return b.entries == expected;
}

Eigen::MatrixXi cartan_companion(const Eigen::MatrixXi& B) {
    const int n = static_cast<int>(B.rows());
    Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) a(i, j) = -std::abs(B(i, j));
        }
    }
    return a;
}

bool is_skew_symmetrizable(const Eigen::MatrixXi& B) {
    const int n = static_cast<int>(B.rows());
    Eigen::VectorXi d;
    try {
        d = roots::symmetrizer(cartan_companion(B));
    } catch (const Error&) {
        return false;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (d(i) * B(i, j) != -d(j) * B(j, i)) return false;
        }
    }
    return true;
}

} // namespace clusterdt::mutation
