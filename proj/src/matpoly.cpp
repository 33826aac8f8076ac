#include "polyloc/matpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace polyloc {

// ---------------------------------------------------------------------------
// ScalarPolynomial

ScalarPolynomial::ScalarPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        coeffs_.push_back(0.0);
        return;
    }
    const double biggest = max_abs_coeff();
    const double threshold = kTrimThreshold * biggest;
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= threshold) {
        coeffs_.pop_back();
    }
    if (biggest == 0.0) {
        coeffs_.assign(1, Complex(0.0));
    }
}

ScalarPolynomial ScalarPolynomial::geometric(int m) {
    return ScalarPolynomial(std::vector<Complex>(static_cast<std::size_t>(std::max(m, 0)) + 1, 1.0));
}

double ScalarPolynomial::max_abs_coeff() const {
    double best = 0.0;
    for (const auto& c : coeffs_) {
        best = std::max(best, std::abs(c));
    }
    return best;
}

Complex ScalarPolynomial::operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

std::pair<ScalarPolynomial, ScalarPolynomial> ScalarPolynomial::divide(
    const ScalarPolynomial& divisor) const {
    if (divisor.is_zero()) {
        throw DegreeError("ScalarPolynomial::divide: division by the zero polynomial");
    }
    const int dn = divisor.degree();
    std::vector<Complex> rem = coeffs_;
    if (degree() < dn) {
        return {ScalarPolynomial(), *this};
    }
    std::vector<Complex> quot(static_cast<std::size_t>(degree() - dn + 1), 0.0);
    const Complex lead = divisor.leading();
    for (int k = degree() - dn; k >= 0; --k) {
        const Complex q = rem[static_cast<std::size_t>(k + dn)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= dn; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
        rem[static_cast<std::size_t>(k + dn)] = 0.0;
    }
    rem.resize(static_cast<std::size_t>(std::max(dn, 1)));
    // The remainder is returned untrimmed so callers see its true size.
    ScalarPolynomial remainder;
    remainder.coeffs_ = std::move(rem);
    return {ScalarPolynomial(std::move(quot)), remainder};
}

ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b) {
    std::vector<Complex> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return ScalarPolynomial(std::move(out));
}

ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b) {
    std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return ScalarPolynomial(std::move(out));
}

ScalarPolynomial operator-(const ScalarPolynomial& a, const ScalarPolynomial& b) {
    std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return ScalarPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// MatrixPolynomial

MatrixPolynomial::MatrixPolynomial(std::vector<ComplexMatrix> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw DegreeError("MatrixPolynomial: at least one coefficient is required");
    }
    const Eigen::Index n = coeffs_.front().rows();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto& a = coeffs_[i];
        if (a.rows() != a.cols() || a.rows() != n || n == 0) {
            throw DimensionError("MatrixPolynomial: coefficient " + std::to_string(i) + " is " +
                                 std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                 ", expected " + std::to_string(n) + "x" + std::to_string(n));
        }
        if (!all_finite(a)) {
            throw DimensionError("MatrixPolynomial: coefficient " + std::to_string(i) +
                                 " has non-finite entries");
        }
    }
    while (coeffs_.size() > 1 && coeffs_.back().isZero(0.0)) {
        coeffs_.pop_back();
    }
    if (coeffs_.back().isZero(0.0)) {
        throw DegreeError("MatrixPolynomial: the zero polynomial has no leading coefficient");
    }
}

double MatrixPolynomial::coefficient_scale() const {
    double best = 0.0;
    for (const auto& a : coeffs_) {
        best = std::max(best, spectral_norm(a));
    }
    return best;
}

bool MatrixPolynomial::operator==(const MatrixPolynomial& other) const {
    if (coeffs_.size() != other.coeffs_.size() || size() != other.size()) {
        return false;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != other.coeffs_[i]) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Operations

ComplexMatrix evaluate(const MatrixPolynomial& p, Complex z) {
    ComplexMatrix acc = p.leading();
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc *= z;
        acc += p.coeff(i);
    }
    return acc;
}

MatrixPolynomial reverse(const MatrixPolynomial& p) {
    std::vector<ComplexMatrix> rev(p.coeffs().rbegin(), p.coeffs().rend());
    return MatrixPolynomial(std::move(rev));
}

MatrixPolynomial monic_reduce(const MatrixPolynomial& p) {
    const ComplexMatrix& lead = p.leading();
    const double norm = spectral_norm(lead);
    if (!(sigma_min(lead) > kSingularityThreshold * norm)) {
        throw SingularLeadingError(
            "leading coefficient is singular; eigenvalues at infinity are not supported, "
            "analyse reverse(P) instead");
    }
    const int n = p.size();
    if (lead.isIdentity(0.0)) {
        return p;
    }
    Eigen::PartialPivLU<ComplexMatrix> lu(lead);
    std::vector<ComplexMatrix> out;
    out.reserve(p.coeffs().size());
    for (int i = 0; i < p.degree(); ++i) {
        out.push_back(lu.solve(p.coeff(i)));
    }
    out.push_back(ComplexMatrix::Identity(n, n));
    return MatrixPolynomial(std::move(out));
}

ComplexMatrix companion(const MatrixPolynomial& p) {
    if (p.degree() < 1) {
        throw DegreeError("companion: degree must be at least 1");
    }
    const MatrixPolynomial monic = monic_reduce(p);
    const Eigen::Index n = p.size();
    const Eigen::Index m = p.degree();
    ComplexMatrix c = ComplexMatrix::Zero(m * n, m * n);
    for (Eigen::Index b = 0; b + 1 < m; ++b) {
        c.block(b * n, (b + 1) * n, n, n).setIdentity();
    }
    for (Eigen::Index b = 0; b < m; ++b) {
        c.block((m - 1) * n, b * n, n, n) = -monic.coeff(static_cast<int>(b));
    }
    return c;
}

Spectrum polyeig(const MatrixPolynomial& p, const EigenOptions& opts) {
    return eigenvalues_dense(companion(p), opts);
}

double residual_scale(const MatrixPolynomial& p, Complex z) {
    return p.coefficient_scale() * std::pow(std::max(1.0, std::abs(z)), p.degree());
}

double eigen_residual(const MatrixPolynomial& p, Complex z) {
    return sigma_min(evaluate(p, z)) / residual_scale(p, z);
}

bool is_eigenvalue(const MatrixPolynomial& p, Complex z, double tol) {
    return sigma_min(evaluate(p, z)) <= tol * residual_scale(p, z);
}

ScalarPolynomial det_poly(const MatrixPolynomial& p, const DetPolyOptions& opts) {
    const int nodes = p.degree() * p.size() + 1;
    const double rho = opts.node_radius;
    auto root_of_unity = [nodes](long long k) {
        const long long r = ((k % nodes) + nodes) % nodes;
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / nodes);
    };

    std::vector<Complex> values(static_cast<std::size_t>(nodes));
    double hadamard_max = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const ComplexMatrix pz = evaluate(p, rho * root_of_unity(j));
        values[static_cast<std::size_t>(j)] = det(pz);
        double hadamard = 1.0;
        for (Eigen::Index i = 0; i < pz.rows(); ++i) {
            hadamard *= pz.row(i).norm();
        }
        hadamard_max = std::max(hadamard_max, hadamard);
    }

    std::vector<Complex> coeffs(static_cast<std::size_t>(nodes));
    double biggest = 0.0;
    for (int k = 0; k < nodes; ++k) {
        Complex acc = 0.0;
        for (int j = 0; j < nodes; ++j) {
            acc += values[static_cast<std::size_t>(j)] * root_of_unity(-static_cast<long long>(j) * k);
        }
        acc /= static_cast<double>(nodes) * std::pow(rho, k);
        coeffs[static_cast<std::size_t>(k)] = acc;
        biggest = std::max(biggest, std::abs(acc));
    }

    // det P vanishes identically to working precision.
    if (biggest <= 1e-13 * hadamard_max) {
        return ScalarPolynomial();
    }
    const double cut = opts.snap * biggest;
    for (auto& c : coeffs) {
        const double re = std::abs(c.real()) < cut ? 0.0 : c.real();
        const double im = std::abs(c.imag()) < cut ? 0.0 : c.imag();
        c = Complex(re, im);
    }
    return ScalarPolynomial(std::move(coeffs));
}

}  // namespace polyloc
