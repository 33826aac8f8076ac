#include "polyloc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "polyloc/rng.hpp"

namespace polyloc {

namespace {

constexpr std::uint64_t kHaarStream = 0x4841415255ULL;

Eigen::VectorXd singular_values(const ComplexMatrix& a) {
    if (a.rows() <= 64) {
        return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues();
    }
    return Eigen::BDCSVD<ComplexMatrix>(a).singularValues();
}

double cabs1(const Complex& z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Eigenvector of the upper triangular T for the eigenvalue T(k, k), by back
// substitution. Near-zero pivots are replaced by `small` so repeated
// eigenvalues still produce a usable direction.
ComplexVector triangular_eigenvector(const ComplexMatrix& t, Eigen::Index k, double small) {
    const Eigen::Index n = t.rows();
    ComplexVector y = ComplexVector::Zero(n);
    y(k) = 1.0;
    const Complex lambda = t(k, k);
    for (Eigen::Index i = k - 1; i >= 0; --i) {
        Complex s = 0.0;
        for (Eigen::Index j = i + 1; j <= k; ++j) {
            s += t(i, j) * y(j);
        }
        Complex d = t(i, i) - lambda;
        if (std::abs(d) < small) {
            d = small;
        }
        y(i) = -s / d;
        if (std::abs(y(i)) > 1e150) {
            y.segment(i, k - i + 1) *= 1e-150;
        }
    }
    return y;
}

}  // namespace

std::vector<double> Spectrum::moduli() const {
    std::vector<double> out;
    out.reserve(eigenvalues.size());
    for (const auto& z : eigenvalues) {
        out.push_back(std::abs(z));
    }
    return out;
}

double Spectrum::max_modulus() const {
    double best = 0.0;
    for (const auto& z : eigenvalues) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double Spectrum::min_modulus() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& z : eigenvalues) {
        best = std::min(best, std::abs(z));
    }
    return best;
}

void require_square(const ComplexMatrix& a, const char* op) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw DimensionError(std::string(op) + ": expected a non-empty square matrix, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

bool all_finite(const ComplexMatrix& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

Complex det(const ComplexMatrix& a) {
    require_square(a, "det");
    return Eigen::PartialPivLU<ComplexMatrix>(a).determinant();
}

double sigma_min(const ComplexMatrix& a) {
    require_square(a, "sigma_min");
    const Eigen::VectorXd s = singular_values(a);
    return s(s.size() - 1);
}

double spectral_norm(const ComplexMatrix& a) {
    require_square(a, "spectral_norm");
    return singular_values(a)(0);
}

double inf_norm(const ComplexMatrix& a) {
    if (a.size() == 0) {
        return 0.0;
    }
    return a.cwiseAbs().rowwise().sum().maxCoeff();
}

ComplexMatrix balance(const ComplexMatrix& a, Eigen::VectorXd& scaling) {
    require_square(a, "balance");
    constexpr double radix = 2.0;
    constexpr double radix_sq = radix * radix;
    const Eigen::Index n = a.rows();
    ComplexMatrix b = a;
    scaling = Eigen::VectorXd::Ones(n);

    bool converged = false;
    for (int pass = 0; pass < 200 && !converged; ++pass) {
        converged = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0;
            double r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j != i) {
                    c += cabs1(b(j, i));
                    r += cabs1(b(i, j));
                }
            }
            if (c == 0.0 || r == 0.0) {
                continue;
            }
            const double total = c + r;
            double f = 1.0;
            double g = r / radix;
            while (c < g) {
                f *= radix;
                c *= radix_sq;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix_sq;
            }
            if ((c + r) / f < 0.95 * total) {
                converged = false;
                scaling(i) *= f;
                b.row(i) /= f;
                b.col(i) *= f;
            }
        }
    }
    return b;
}

Spectrum eigenvalues_dense(const ComplexMatrix& a, const EigenOptions& opts) {
    require_square(a, "eigenvalues_dense");
    if (!all_finite(a)) {
        throw DimensionError("eigenvalues_dense: matrix has non-finite entries");
    }
    const Eigen::Index n = a.rows();

    Eigen::VectorXd scaling = Eigen::VectorXd::Ones(n);
    const ComplexMatrix work = opts.balance ? balance(a, scaling) : a;

    Eigen::ComplexSchur<ComplexMatrix> schur(n);
    schur.setMaxIterations(static_cast<Eigen::Index>(opts.iterations_per_eigenvalue) * n);
    schur.compute(work, /*computeU=*/true);

    const ComplexMatrix& t = schur.matrixT();
    Spectrum out;
    out.eigenvalues.reserve(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues.push_back(t(k, k));
    }
    if (schur.info() != Eigen::Success) {
        throw SolverFailure("eigenvalues_dense: QR iteration did not converge within " +
                                std::to_string(opts.iterations_per_eigenvalue * n) + " sweeps",
                            out.eigenvalues);
    }

    const double norm_a = spectral_norm(a);
    if (norm_a == 0.0) {
        out.residuals.assign(n, 0.0);
        return out;
    }

    const ComplexMatrix& u = schur.matrixU();
    const double small =
        std::max(std::numeric_limits<double>::epsilon() * t.cwiseAbs().maxCoeff(),
                 std::numeric_limits<double>::min());
    out.residuals.reserve(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex lambda = out.eigenvalues[k];
        ComplexVector v = scaling.cast<Complex>().asDiagonal() * (u * triangular_eigenvector(t, k, small));
        double residual = (a * v - lambda * v).norm() / v.norm() / norm_a;
        if (!(residual <= opts.residual_tol)) {
            // Distance to singularity of A - lambda I bounds the backward error
            // even where the recovered eigenvector is poor (clusters).
            ComplexMatrix shifted = a;
            shifted.diagonal().array() -= lambda;
            residual = std::min(residual, sigma_min(shifted) / norm_a);
        }
        if (!(residual <= opts.residual_tol)) {
            throw SolverFailure("eigenvalues_dense: eigenvalue " + std::to_string(k) +
                                    " has relative residual " + std::to_string(residual),
                                out.eigenvalues);
        }
        out.residuals.push_back(residual);
    }
    return out;
}

double spectral_radius(const ComplexMatrix& a) { return eigenvalues_dense(a).max_modulus(); }

Spectrum scalar_roots(std::span<const Complex> coeffs, const EigenOptions& opts) {
    if (coeffs.size() < 2) {
        throw DegreeError("scalar_roots: polynomial degree must be at least 1");
    }
    const Complex lead = coeffs.back();
    if (lead == Complex(0.0)) {
        throw DegreeError("scalar_roots: leading coefficient is zero");
    }
    const auto degree = static_cast<Eigen::Index>(coeffs.size() - 1);
    ComplexMatrix c = ComplexMatrix::Zero(degree, degree);
    for (Eigen::Index i = 0; i + 1 < degree; ++i) {
        c(i, i + 1) = 1.0;
    }
    for (Eigen::Index j = 0; j < degree; ++j) {
        c(degree - 1, j) = -coeffs[static_cast<std::size_t>(j)] / lead;
    }
    return eigenvalues_dense(c, opts);
}

ComplexMatrix haar_unitary(int n, std::uint64_t seed) {
    if (n < 1) {
        throw DimensionError("haar_unitary: n must be positive");
    }
    CounterRng rng(seed, kHaarStream);
    ComplexMatrix z(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            z(i, j) = Complex(re, im) * std::sqrt(0.5);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix& r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        const Complex phase = mag > 0.0 ? r(j, j) / mag : Complex(1.0);
        q.col(j) *= phase;
    }
    return q;
}

}  // namespace polyloc
