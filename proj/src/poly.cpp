#include "clusterdt/poly.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "clusterdt/errors.hpp"

namespace clusterdt::spectrum {

Poly::Poly(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<double> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(double c) { return Poly(std::vector<double>{c}); }

Poly Poly::monomial(int degree, double coefficient) {
    std::vector<double> c(degree + 1, 0.0);
    c[degree] = coefficient;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kTrimThreshold) coeffs_.pop_back();
}

double Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[k];
}

double Poly::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<std::complex<double>> Poly::roots() const {
    const int n = degree();
    if (n < 1) throw NumericError("Poly::roots: degree must be at least 1");

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    double lead = coeffs_.back();
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs_[i] / lead;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    if (solver.info() != Eigen::Success) {
        throw NumericError("Poly::roots: eigenvalue iteration failed");
    }
    std::vector<std::complex<double>> out(n);
    for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (double& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    const auto& a = coeffs_;
    const auto& b = rhs.coeffs_;
    std::vector<double> prod(a.size() + b.size() - 1, 0.0);
    // Kahan-compensated accumulation per output coefficient: convolution
    // terms can cancel heavily once degrees reach the hundreds.
    std::vector<double> comp(prod.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::size_t k = i + j;
            double term = a[i] * b[j] - comp[k];
            double t = prod[k] + term;
            comp[k] = (t - prod[k]) - term;
            prod[k] = t;
        }
    }
    coeffs_ = std::move(prod);
    trim();
    return *this;
}

Poly& Poly::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    trim();
    return *this;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& numerator, const Poly& denominator) {
    if (denominator.is_zero()) throw NumericError("Poly::divrem: division by zero polynomial");
    if (numerator.degree() < denominator.degree()) return {Poly(), numerator};

    std::vector<double> rem = numerator.coeffs_;
    const int dn = numerator.degree();
    const int dd = denominator.degree();
    const double lead = denominator.coeffs_.back();
    std::vector<double> quot(dn - dd + 1, 0.0);

    for (int k = dn - dd; k >= 0; --k) {
        double q = rem[k + dd] / lead;
        quot[k] = q;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= q * denominator.coeffs_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

double coeff_distance(const Poly& a, const Poly& b) {
    int top = std::max(a.degree(), b.degree());
    double worst = 0.0;
    for (int k = 0; k <= top; ++k) worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
    return worst;
}

double scaled_coeff_distance(const Poly& a, const Poly& b) {
    double scale = std::max(1.0, std::max(a.max_abs_coeff(), b.max_abs_coeff()));
    return coeff_distance(a, b) / scale;
}

Poly cyclic_quotient(int m) {
    if (m < 1) throw NumericError("cyclic_quotient: m must be >= 1");
    return Poly(std::vector<double>(m, 1.0));
}

Poly poly_pow(const Poly& base, int exponent) {
    if (exponent < 0) throw NumericError("poly_pow: exponent must be non-negative");
    Poly acc = Poly::constant(1.0);
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

} // namespace clusterdt::spectrum
