#include "polyloc/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "polyloc/rng.hpp"

namespace polyloc {

namespace {

constexpr std::uint64_t kPermutationStream = 0x5045524dULL;
constexpr std::uint64_t kBirkhoffStream = 0x4249524bULL;
constexpr std::uint64_t kFamilyDStream = 0x46414d44ULL;
constexpr std::uint64_t kFamilySrStream = 0x46414d53ULL;

std::vector<int> shuffled(int n, CounterRng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return perm;
}

ComplexMatrix permutation_matrix(const std::vector<int>& perm) {
    const auto n = static_cast<Eigen::Index>(perm.size());
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
    }
    return p;
}

// Matrix commuting with the upper triangular `base` (distinct diagonal) whose
// diagonal is `diag`, by the Parlett recurrence.
ComplexMatrix commuting_triangular(const ComplexMatrix& base, const ComplexVector& diag) {
    const Eigen::Index n = base.rows();
    ComplexMatrix f = ComplexMatrix::Zero(n, n);
    f.diagonal() = diag;
    for (Eigen::Index gap = 1; gap < n; ++gap) {
        for (Eigen::Index i = 0; i + gap < n; ++i) {
            const Eigen::Index j = i + gap;
            Complex acc = base(i, j) * (f(j, j) - f(i, i));
            for (Eigen::Index k = i + 1; k < j; ++k) {
                acc += base(i, k) * f(k, j) - f(i, k) * base(k, j);
            }
            f(i, j) = acc / (base(j, j) - base(i, i));
        }
    }
    return f;
}

void require(bool cond, const std::string& what) {
    if (!cond) {
        throw DomainError(what);
    }
}

}  // namespace

std::string to_string(Family f) {
    return f == Family::DoublyStochastic ? "D" : "S_r";
}

void EnsembleSpec::validate() const {
    require(n >= 1, "EnsembleSpec: n must be at least 1");
    require(m >= 1, "EnsembleSpec: m must be at least 1");
    require(trials >= 0, "EnsembleSpec: trials must be nonnegative");
    require(k >= 0, "EnsembleSpec: k must be nonnegative");
    if (family == Family::SchurStable) {
        require(r > 0.0, "EnsembleSpec: r must be positive for the S_r family");
    }
}

ComplexMatrix random_permutation(int n, std::uint64_t seed) {
    require(n >= 1, "random_permutation: n must be at least 1");
    CounterRng rng(seed, kPermutationStream);
    return permutation_matrix(shuffled(n, rng));
}

ComplexMatrix random_doubly_stochastic(int n, int k, std::uint64_t seed) {
    require(n >= 1, "random_doubly_stochastic: n must be at least 1");
    require(k >= 1, "random_doubly_stochastic: k must be at least 1");
    CounterRng rng(seed, kBirkhoffStream);
    std::vector<std::vector<int>> perms;
    std::vector<double> weights;
    perms.reserve(static_cast<std::size_t>(k));
    weights.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        perms.push_back(shuffled(n, rng));
        weights.push_back(rng.exponential());
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < k; ++j) {
        const double w = weights[static_cast<std::size_t>(j)] / total;
        for (int i = 0; i < n; ++i) {
            a(i, perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) += w;
        }
    }
    return a;
}

MatrixPolynomial random_D_polynomial(int n, int m, int k, std::uint64_t seed) {
    require(m >= 1, "random_D_polynomial: m must be at least 1");
    const int terms = k > 0 ? k : n * n;
    CounterRng rng(seed, kFamilyDStream);
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        const std::uint64_t sub = rng.next();
        coeffs.push_back(i == 0 || i == m ? random_permutation(n, sub)
                                          : random_doubly_stochastic(n, terms, sub));
    }
    return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial random_ds_coefficients(int n, int m, int k, std::uint64_t seed) {
    require(m >= 1, "random_ds_coefficients: m must be at least 1");
    const int terms = k > 0 ? k : n * n;
    CounterRng rng(seed, kFamilyDStream + 1);
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        coeffs.push_back(random_doubly_stochastic(n, terms, rng.next()));
    }
    return MatrixPolynomial(std::move(coeffs));
}

bool is_doubly_stochastic(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (a(i, j).real() < -tol || std::abs(a(i, j).imag()) > tol) {
                return false;
            }
        }
    }
    const ComplexVector rows = a.rowwise().sum();
    const ComplexVector cols = a.colwise().sum().transpose();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (std::abs(rows(i) - 1.0) > tol || std::abs(cols(i) - 1.0) > tol) {
            return false;
        }
    }
    return true;
}

bool is_permutation(const ComplexMatrix& a, double tol) {
    if (!is_doubly_stochastic(a, tol)) {
        return false;
    }
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const double pattern = a(i, j).real() > 0.5 ? 1.0 : 0.0;
            if (std::abs(a(i, j) - pattern) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool validate_D(const MatrixPolynomial& p, double tol) {
    for (const auto& a : p.coeffs()) {
        if (!is_doubly_stochastic(a, tol)) {
            return false;
        }
    }
    return is_permutation(p.coeff(0), tol) && is_permutation(p.leading(), tol);
}

MatrixPolynomial assemble_commuting(const ComplexMatrix& u, std::span<const ComplexMatrix> triangular) {
    const Eigen::Index n = u.rows();
    std::vector<ComplexMatrix> coeffs;
    coeffs.reserve(triangular.size() + 1);
    for (const auto& t : triangular) {
        coeffs.push_back(u * t * u.adjoint());
    }
    coeffs.push_back(ComplexMatrix::Identity(n, n));
    return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial random_commuting_sr(int n, int m, double r, std::uint64_t seed) {
    require(n >= 1, "random_commuting_sr: n must be at least 1");
    require(m >= 1, "random_commuting_sr: m must be at least 1");
    require(r > 0.0, "random_commuting_sr: r must be positive");
    CounterRng rng(seed, kFamilySrStream);
    const ComplexMatrix u = haar_unitary(n, rng.next());

    ComplexMatrix base = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        base(i, i) = static_cast<double>(i);
        for (int j = i + 1; j < n; ++j) {
            base(i, j) = rng.in_disc(1.0);
        }
    }

    std::vector<ComplexMatrix> tri;
    tri.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        ComplexVector diag(n);
        for (int k = 0; k < n; ++k) {
            diag(k) = rng.in_disc(0.95 * r);
        }
        tri.push_back(commuting_triangular(base, diag));
    }

    // A shared similarity diag(s^k) keeps the family commuting and scales
    // entry (i, j) by s^(j-i); pick s so every off-diagonal entry is <= r.
    double s = 1.0;
    for (const auto& t : tri) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double mag = std::abs(t(i, j));
                if (mag > r) {
                    s = std::min(s, 0.999 * std::pow(r / mag, 1.0 / (j - i)));
                }
            }
        }
    }
    if (s < 1.0) {
        for (auto& t : tri) {
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    t(i, j) *= std::pow(s, j - i);
                }
            }
        }
    }
    return assemble_commuting(u, tri);
}

std::string SrCheck::failed_predicate() const {
    if (!monic) return "monicity";
    if (!commuting) return "commutativity";
    if (!radius) return "spectral radius";
    return {};
}

SrCheck check_sr(const MatrixPolynomial& p, double r, double tol) {
    SrCheck out;
    const int n = p.size();
    const int m = p.degree();
    out.monic = m >= 1 && (p.leading() - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <= tol;

    double scale = 0.0;
    for (int i = 0; i < m; ++i) {
        scale = std::max(scale, spectral_norm(p.coeff(i)));
    }
    scale *= scale;
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const ComplexMatrix comm = p.coeff(i) * p.coeff(j) - p.coeff(j) * p.coeff(i);
            worst = std::max(worst, spectral_norm(comm));
        }
    }
    out.max_commutator = scale > 0.0 ? worst / scale : worst;
    out.commuting = worst <= tol * scale;

    out.r_eff = 0.0;
    for (int i = 0; i < m; ++i) {
        out.r_eff = std::max(out.r_eff, spectral_radius(p.coeff(i)));
    }
    out.radius = out.r_eff < r;
    return out;
}

bool validate_sr(const MatrixPolynomial& p, double r, double tol) { return check_sr(p, r, tol).ok(); }

ComplexMatrix swap_matrix() {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
    return s;
}

InfWitness extremal_inf_witness(double r) {
    require(r > 0.5 && r < 1.0, "extremal_inf_witness: r must lie in (1/2, 1)");
    int d = 0;
    double power = 1.0;
    double sum = 0.0;
    while (sum <= 1.0) {
        ++d;
        power *= r;
        sum += power;
        require(d < 100000, "extremal_inf_witness: r too close to 1/2");
    }
    std::vector<ComplexMatrix> coeffs(static_cast<std::size_t>(d) + 1, ComplexMatrix::Identity(2, 2));
    coeffs[0] = swap_matrix();
    return {MatrixPolynomial(std::move(coeffs)), d};
}

MatrixPolynomial extremal_sup_witness(int m) {
    require(m >= 1, "extremal_sup_witness: m must be at least 1");
    std::vector<ComplexMatrix> coeffs(static_cast<std::size_t>(m) + 1, swap_matrix());
    coeffs.back() = ComplexMatrix::Identity(2, 2);
    return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial schur_sup_witness(int m, int n_param, double r) {
    require(m >= 1, "schur_sup_witness: m must be at least 1");
    require(n_param >= 1, "schur_sup_witness: n_param must be at least 1");
    require(r >= 1.0 / n_param, "schur_sup_witness: r must be at least 1/n_param");
    const double c = r - 1.0 / n_param;
    std::vector<ComplexMatrix> coeffs(static_cast<std::size_t>(m) + 1,
                                      ComplexMatrix(-c * ComplexMatrix::Identity(2, 2)));
    coeffs.back() = ComplexMatrix::Identity(2, 2);
    return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial noncommuting_counterexample(int n_param) {
    require(n_param >= 1, "noncommuting_counterexample: n must be at least 1");
    ComplexMatrix a0 = ComplexMatrix::Zero(2, 2);
    ComplexMatrix a1 = ComplexMatrix::Zero(2, 2);
    a0(0, 1) = -static_cast<double>(n_param);
    a1(1, 0) = -static_cast<double>(n_param);
    return MatrixPolynomial({a0, a1, ComplexMatrix::Identity(2, 2)});
}

ComplexMatrix mass_spring_stiffness(int n) {
    require(n >= 1, "mass_spring: order must be at least 1");
    ComplexMatrix t = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        t(i, i) = 3.0;
        if (i + 1 < n) {
            t(i, i + 1) = -1.0;
            t(i + 1, i) = -1.0;
        }
    }
    return t;
}

MatrixPolynomial mass_spring(int n) {
    const ComplexMatrix t = mass_spring_stiffness(n);
    return MatrixPolynomial({ComplexMatrix(5.0 * t), ComplexMatrix(10.0 * t), ComplexMatrix::Identity(n, n)});
}

}  // namespace polyloc
