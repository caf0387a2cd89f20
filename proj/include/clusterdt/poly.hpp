#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

namespace clusterdt::spectrum {

/// Dense univariate polynomial over the reals, coefficients stored lowest
/// degree first.  Trailing coefficients below 1e-12 in magnitude are
/// trimmed on construction, so the zero polynomial has an empty list and
/// degree -1.  Products use compensated summation; the degree-248 check
/// in the height identity depends on that.
class Poly {
public:
    static constexpr double kTrimThreshold = 1e-12;

    Poly() = default;
    explicit Poly(std::vector<double> coefficients);
    Poly(std::initializer_list<double> coefficients);

    static Poly constant(double c);
    static Poly monomial(int degree, double coefficient = 1.0);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k; zero beyond the stored range.
    double coeff(int k) const;
    const std::vector<double>& coeffs() const { return coeffs_; }
    double max_abs_coeff() const;

    double eval(double x) const;
    std::complex<double> eval(std::complex<double> z) const;

    /// All complex roots via the eigenvalues of the companion matrix of
    /// the monic normalization.  Degree must be at least 1.
    std::vector<std::complex<double>> roots() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(double s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(double s, Poly a) { return a *= s; }
    friend Poly operator*(Poly a, double s) { return a *= s; }

    /// Long division: returns (quotient, remainder) with
    /// numerator = quotient * denominator + remainder.
    static std::pair<Poly, Poly> divrem(const Poly& numerator, const Poly& denominator);

private:
    void trim();
    std::vector<double> coeffs_;
};

/// Max absolute coefficient difference.
double coeff_distance(const Poly& a, const Poly& b);

/// coeff_distance normalized by max(1, largest coefficient magnitude of
/// either operand); coincides with coeff_distance whenever coefficients
/// are of order one.
double scaled_coeff_distance(const Poly& a, const Poly& b);

/// 1 + x + ... + x^{m-1}, i.e. (x^m - 1)/(x - 1).
Poly cyclic_quotient(int m);

/// Non-negative integer power by repeated multiplication.
Poly poly_pow(const Poly& base, int exponent);

} // namespace clusterdt::spectrum
