#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "polyloc/errors.hpp"

namespace polyloc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Finite eigenvalues with a backward-error estimate per eigenvalue.
struct Spectrum {
    std::vector<Complex> eigenvalues;
    std::vector<double> residuals;

    std::size_t count() const noexcept { return eigenvalues.size(); }
    std::vector<double> moduli() const;
    double max_modulus() const;
    double min_modulus() const;
};

struct EigenOptions {
    /// Relative backward-error bound each eigenvalue must meet.
    double residual_tol = 1e-8;
    /// QR sweeps allowed per eigenvalue before declaring non-convergence.
    int iterations_per_eigenvalue = 60;
    bool balance = true;
};

void require_square(const ComplexMatrix& a, const char* op);
bool all_finite(const ComplexMatrix& a);

Complex det(const ComplexMatrix& a);
double sigma_min(const ComplexMatrix& a);
double spectral_norm(const ComplexMatrix& a);
double inf_norm(const ComplexMatrix& a);

/// Diagonal similarity D^{-1} A D with power-of-two scalings that roughly
/// equalises off-diagonal row and column norms. Returns the balanced matrix;
/// `scaling` receives diag(D).
ComplexMatrix balance(const ComplexMatrix& a, Eigen::VectorXd& scaling);

/// All eigenvalues of a dense square matrix (balanced complex Schur form).
/// Throws SolverFailure when QR does not converge or a residual misses
/// `opts.residual_tol`.
Spectrum eigenvalues_dense(const ComplexMatrix& a, const EigenOptions& opts = {});

double spectral_radius(const ComplexMatrix& a);

/// Roots of sum_k coeffs[k] z^k through the scalar companion matrix.
Spectrum scalar_roots(std::span<const Complex> coeffs, const EigenOptions& opts = {});

/// Haar-distributed unitary from a seeded complex Gaussian matrix.
ComplexMatrix haar_unitary(int n, std::uint64_t seed);

}  // namespace polyloc
