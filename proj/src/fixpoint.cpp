#include "clusterdt/fixpoint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "clusterdt/errors.hpp"
#include "clusterdt/instrument.hpp"

namespace clusterdt::fixpoint {

namespace {

using roots::CartanSpec;
using roots::Family;

// prod_{j != i} a_j^{-a(j,i)} evaluated in ordinary coordinates.
double exchange_product(const CartanSpec& spec, const Eigen::VectorXd& a, int i) {
    double prod = 1.0;
    for (int j = 0; j < spec.rank; ++j) {
        if (j == i) continue;
        int e = -spec.cartan(j, i);
        if (e != 0) prod *= std::pow(a(j), static_cast<double>(e));
    }
    return prod;
}

// F_i(l) = 2 l_i - log(1 + exp(sum_{j != i} -a(j,i) l_j)) and its Jacobian.
// Roots of F are exactly the logs of positive solutions of the a-system.
void eval_F(const CartanSpec& spec, const Eigen::VectorXd& l, Eigen::VectorXd& F,
            Eigen::MatrixXd* J) {
    const int n = spec.rank;
    F.resize(n);
    if (J) J->setZero(n, n);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j != i) s += -spec.cartan(j, i) * l(j);
        }
        double es = std::exp(s);
        F(i) = 2.0 * l(i) - std::log1p(es);
        if (J) {
            double sigma = es / (1.0 + es);
            (*J)(i, i) = 2.0;
            for (int j = 0; j < n; ++j) {
                if (j != i) (*J)(i, j) = spec.cartan(j, i) * sigma;
            }
        }
    }
}

} // namespace

Eigen::VectorXd newton_from(const roots::CartanSpec& spec, const Eigen::VectorXd& start,
                            double tol, int max_iter) {
    const int n = spec.rank;
    if (start.size() != n || start.minCoeff() <= 0.0) {
        throw NumericError("newton_from: start must be a positive n-vector");
    }
    Eigen::VectorXd l = start.array().log();
    Eigen::VectorXd F;
    Eigen::MatrixXd J;
    eval_F(spec, l, F, &J);
    double fnorm = F.lpNorm<Eigen::Infinity>();

    for (int iter = 0; iter < max_iter; ++iter) {
        if (fnorm < tol) return l.array().exp();
        Eigen::VectorXd step = J.partialPivLu().solve(-F);
        double scale = 1.0;
        for (int halving = 0; halving < 60; ++halving) {
            Eigen::VectorXd cand = l + scale * step;
            Eigen::VectorXd Fc;
            eval_F(spec, cand, Fc, nullptr);
            double fc = Fc.lpNorm<Eigen::Infinity>();
            if (fc < fnorm) {
                l = cand;
                break;
            }
            scale *= 0.5;
        }
        eval_F(spec, l, F, &J);
        double fnew = F.lpNorm<Eigen::Infinity>();
        if (fnew == fnorm) break;  // no progress even after damping
        fnorm = fnew;
    }
    if (fnorm >= tol) {
        throw NumericError("newton_from: no convergence for " + spec.name() +
                           ", residual " + std::to_string(fnorm));
    }
    return l.array().exp();
}

Eigen::VectorXd solve_a(const roots::CartanSpec& spec, double tol, int max_iter) {
    instrument::bump("solve_a");
    if (tol <= 0.0) throw NumericError("solve_a: tol must be positive");
    const int n = spec.rank;
    Eigen::VectorXd a = Eigen::VectorXd::Constant(n, std::numbers::sqrt2);

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_rel = 0.0;
        for (int i = 0; i < n; ++i) {
            double next = std::sqrt(1.0 + exchange_product(spec, a, i));
            max_rel = std::max(max_rel, std::abs(next - a(i)) / next);
            a(i) = next;
        }
        if (max_rel < tol) return a;
    }
    // The sweep converges for every supported type in practice; the Newton
    // fallback keeps the contract honest for tight tolerances.
    return newton_from(spec, a, tol);
}

double epsilon_cubic_root() {
    auto f = [](double e) { return ((e - 2.0) * e - 1.0) * e + 1.0; };
    double lo = 2.0, hi = 3.0;
    while (hi - lo > 1e-14) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

Eigen::VectorXd closed_form_a(const roots::CartanSpec& spec) {
    instrument::bump("closed_form_a");
    const int n = spec.rank;
    Eigen::VectorXd a(n);

    auto sine_ratios = [&](double theta) {
        for (int i = 0; i < n; ++i) a(i) = std::sin((i + 2) * theta) / std::sin(theta);
    };

    switch (spec.family) {
    case Family::A:
        sine_ratios(std::numbers::pi / (n + 3));
        break;
    case Family::B:
        for (int i = 0; i < n - 1; ++i) a(i) = i + 2;
        a(n - 1) = std::sqrt(n + 1.0);
        break;
    case Family::C:
        sine_ratios(std::numbers::pi / (2 * n + 2));
        break;
    case Family::D:
        for (int i = 0; i < n - 2; ++i) a(i) = i + 2;
        a(n - 2) = std::sqrt(static_cast<double>(n));
        a(n - 1) = std::sqrt(static_cast<double>(n));
        break;
    case Family::E:
        if (n == 6) {
            double e = epsilon_cubic_root();
            a << e, e * e - 1.0, 2.0 * e * e - e - 1.0, e * (e - 1.0), e * e - 1.0, e;
        } else if (n == 7) {
            double s5 = std::sqrt(5.0);
            a << (3.0 + s5) / 2.0, (5.0 + 3.0 * s5) / 2.0, 6.0 + 3.0 * s5,
                std::sqrt(7.0 + 3.0 * s5), 2.0 * std::sqrt(7.0 + 3.0 * s5), 2.0 + s5,
                std::sqrt(3.0 + s5);
        } else {
            double s2 = std::numbers::sqrt2;
            a << 2.0 + s2, 5.0 + 4.0 * s2, 16.0 + 12.0 * s2, 3.0 + 2.0 * s2, 9.0 + 6.0 * s2,
                5.0 + 3.0 * s2, 2.0 + 2.0 * s2, 1.0 + s2;
        }
        break;
    case Family::F: {
        double e = epsilon_cubic_root();
        a << e, e * e - 1.0, 2.0 * e * e - e - 1.0, e * (e - 1.0);
        break;
    }
    case Family::G:
        a << 3.0, 2.0;
        break;
    }
    return a;
}

Eigen::VectorXd b_from_a(const Eigen::VectorXd& a) {
    instrument::bump("b_from_a");
    if (a.minCoeff() <= 1.0) {
        throw NumericError("b_from_a: requires a_i > 1 for every coordinate");
    }
    return a.array().square() - 1.0;
}

Eigen::VectorXd kappa_from_a(const roots::CartanSpec& spec, const Eigen::VectorXd& a,
                             double* disagreement) {
    instrument::bump("kappa_from");
    const int n = spec.rank;
    if (a.size() != n || a.minCoeff() <= 1.0) {
        throw NumericError("kappa_from_a: requires a_i > 1 matching the spec rank");
    }

    Eigen::VectorXd b = a.array().square() - 1.0;
    Eigen::VectorXd k1 = a.array().square() / (a.array().square() - 1.0);
    Eigen::VectorXd k2 = (b.array() + 1.0) / b.array();
    Eigen::VectorXd k3(n);
    for (int i = 0; i < n; ++i) {
        double prod = 1.0;
        for (int j = 0; j < n; ++j) {
            int e = spec.cartan(j, i);
            if (e != 0) prod *= std::pow(a(j), static_cast<double>(e));
        }
        k3(i) = prod;
    }

    double dis = std::max((k1 - k2).lpNorm<Eigen::Infinity>(),
                          std::max((k1 - k3).lpNorm<Eigen::Infinity>(),
                                   (k2 - k3).lpNorm<Eigen::Infinity>()));
    if (disagreement) *disagreement = dis;
    if (dis > 1e-8) {
        throw InternalCheckError("kappa_from_a: formulas disagree by " + std::to_string(dis) +
                                 " for " + spec.name());
    }
    return k1;
}

Eigen::VectorXd kappa_from_b(const Eigen::VectorXd& b) {
    instrument::bump("kappa_from");
    if (b.minCoeff() <= 0.0) throw NumericError("kappa_from_b: requires b_i > 0");
    return (b.array() + 1.0) / b.array();
}

Eigen::VectorXd u_from_kappa(const Eigen::VectorXd& kappa) {
    instrument::bump("u_from_kappa");
    if (kappa.minCoeff() <= 1.0) {
        throw NumericError("u_from_kappa: requires kappa_i > 1");
    }
    return kappa.cwiseInverse();
}

bool vinberg_gate(const Eigen::MatrixXi& A, const Eigen::VectorXd& a) {
    instrument::bump("vinberg_gate");
    const int n = static_cast<int>(A.rows());
    if (A.cols() != n || a.size() != n || a.minCoeff() <= 0.0) {
        throw NumericError("vinberg_gate: needs a square matrix and a positive vector");
    }
    Eigen::VectorXd log_a = a.array().log();
    Eigen::VectorXd row = A.cast<double>().transpose() * log_a;  // (log a) * A
    return row.minCoeff() > 0.0;
}

FixedPointData fixed_point_data(const roots::CartanSpec& spec) {
    FixedPointData data;
    data.a = solve_a(spec);
    data.b = b_from_a(data.a);
    data.kappa = kappa_from_a(spec, data.a);
    data.u = u_from_kappa(data.kappa);
    return data;
}

namespace {

// Equation residual scaled by the size of its terms, so types whose
// fixed-point values reach 1e3 are judged at the same precision as the
// small ones.  For terms below 1 this is the plain absolute residual.
double scaled_gap(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

} // namespace

double residual_a(const roots::CartanSpec& spec, const Eigen::VectorXd& a) {
    double worst = 0.0;
    for (int i = 0; i < spec.rank; ++i) {
        worst = std::max(worst, scaled_gap(a(i) * a(i), 1.0 + exchange_product(spec, a, i)));
    }
    return worst;
}

double residual_b(const roots::CartanSpec& spec, const Eigen::VectorXd& b) {
    double worst = 0.0;
    for (int i = 0; i < spec.rank; ++i) {
        double prod = 1.0;
        for (int j = 0; j < spec.rank; ++j) {
            if (j == i) continue;
            int e = -spec.cartan(j, i);
            if (e != 0) prod *= std::pow(1.0 + b(j), static_cast<double>(e));
        }
        worst = std::max(worst, scaled_gap(b(i) * b(i), prod));
    }
    return worst;
}

double residual_u(const roots::CartanSpec& spec, const Eigen::VectorXd& u) {
    double worst = 0.0;
    for (int i = 0; i < spec.rank; ++i) {
        double prod = 1.0;
        for (int j = 0; j < spec.rank; ++j) {
            int e = spec.cartan(j, i);
            if (e != 0) prod *= std::pow(1.0 - u(j), static_cast<double>(e));
        }
        worst = std::max(worst, scaled_gap(u(i) * u(i), prod));
    }
    return worst;
}

} // namespace clusterdt::fixpoint
