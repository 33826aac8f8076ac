#pragma once

#include <span>
#include <utility>
#include <vector>

#include "polyloc/numerics.hpp"

namespace polyloc {

/// Dense scalar polynomial, coefficients ascending by degree. Trailing
/// coefficients below 1e-10 of the largest magnitude are trimmed, so the
/// stored leading coefficient is nonzero unless the polynomial is zero.
class ScalarPolynomial {
public:
    static constexpr double kTrimThreshold = 1e-10;

    ScalarPolynomial() : coeffs_{Complex(0.0)} {}
    explicit ScalarPolynomial(std::vector<Complex> coeffs);

    /// 1 + z + ... + z^m
    static ScalarPolynomial geometric(int m);

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Complex leading() const noexcept { return coeffs_.back(); }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0); }
    double max_abs_coeff() const;

    Complex operator()(Complex z) const;

    /// Long division: returns (quotient, remainder) with deg remainder < deg divisor.
    std::pair<ScalarPolynomial, ScalarPolynomial> divide(const ScalarPolynomial& divisor) const;

    friend ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b);
    friend ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b);
    friend ScalarPolynomial operator-(const ScalarPolynomial& a, const ScalarPolynomial& b);

private:
    std::vector<Complex> coeffs_;
};

/// P(z) = sum_{i=0}^{m} A_i z^i with square n x n coefficients.
///
/// Construction checks that every coefficient is square, finite and of the
/// same order, then drops exactly-zero trailing coefficients so that A_m != 0.
class MatrixPolynomial {
public:
    explicit MatrixPolynomial(std::vector<ComplexMatrix> coeffs);

    int size() const noexcept { return static_cast<int>(coeffs_.front().rows()); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<ComplexMatrix>& coeffs() const noexcept { return coeffs_; }
    const ComplexMatrix& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const ComplexMatrix& leading() const noexcept { return coeffs_.back(); }

    /// max_i ||A_i||_2
    double coefficient_scale() const;

    bool operator==(const MatrixPolynomial& other) const;

private:
    std::vector<ComplexMatrix> coeffs_;
};

/// Relative threshold under which a leading coefficient counts as singular.
inline constexpr double kSingularityThreshold = 1e-8;

ComplexMatrix evaluate(const MatrixPolynomial& p, Complex z);

/// z^m P(1/z); trailing zero coefficients (from A_0 = 0) are trimmed.
MatrixPolynomial reverse(const MatrixPolynomial& p);

/// Premultiply by A_m^{-1} so the leading coefficient is exactly I.
MatrixPolynomial monic_reduce(const MatrixPolynomial& p);

/// mn x mn block companion matrix: identity blocks on the block
/// superdiagonal, last block row (-U_0, ..., -U_{m-1}).
ComplexMatrix companion(const MatrixPolynomial& p);

Spectrum polyeig(const MatrixPolynomial& p, const EigenOptions& opts = {});

/// Backward-error scale used by eigenvalue tests at z:
/// max_i ||A_i||_2 * max(1, |z|)^m.
double residual_scale(const MatrixPolynomial& p, Complex z);

/// sigma_min(P(z)) / residual_scale(P, z)
double eigen_residual(const MatrixPolynomial& p, Complex z);

bool is_eigenvalue(const MatrixPolynomial& p, Complex z, double tol);

struct DetPolyOptions {
    /// Radius of the interpolation circle.
    double node_radius = 1.0;
    /// Coefficients below this fraction of the largest are set to zero.
    double snap = 1e-9;
};

/// det P(z) as a scalar polynomial, by evaluating det P at mn+1 points on a
/// circle and inverting the discrete Fourier system.
ScalarPolynomial det_poly(const MatrixPolynomial& p, const DetPolyOptions& opts = {});

}  // namespace polyloc
