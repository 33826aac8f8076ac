#pragma once

#include <span>
#include <string>
#include <vector>

#include "polyloc/ensembles.hpp"

namespace polyloc {

/// Padding applied to strict inequalities: "x < b" is accepted when
/// x < b + kStrictPad, and the signed margin b - x is reported alongside.
inline constexpr double kStrictPad = 1e-6;
inline constexpr double kAnnulusInner = 0.5;
inline constexpr double kAnnulusOuter = 2.0;
inline constexpr double kDefaultDTol = 1e-9;
inline constexpr double kDefaultSrTol = 1e-8;

/// 1 + max_{i<n} |a_i / a_n|; an upper bound on every root modulus.
double cauchy_bound(const ScalarPolynomial& p);
double cauchy_bound(std::span<const Complex> coeffs);

struct AnnulusReport {
    std::string id;
    std::vector<Complex> eigenvalues;
    std::vector<double> moduli;
    double inner_margin = 0.0;  ///< min|z| - 1/2
    double outer_margin = 0.0;  ///< 2 - max|z|
    bool pass = false;
};

/// Eigenvalues of a member of D against the annulus 1/2 < |z| < 2.
/// Throws FamilyError when validate_D fails.
AnnulusReport annulus_check(const MatrixPolynomial& p, const std::string& id = {},
                            double family_tol = kDefaultDTol);

struct DiscReport {
    std::string id;
    std::vector<Complex> eigenvalues;
    double r_declared = 0.0;
    double r_eff = 0.0;  ///< max_i spectral_radius(A_i)
    double bound = 0.0;  ///< r_eff + 1
    double max_modulus = 0.0;
    double margin = 0.0;  ///< bound - max_modulus
    bool pass = false;
};

/// Eigenvalues of a monic commuting polynomial against |z| < r_eff + 1.
/// Throws FamilyError naming the failed predicate.
DiscReport disc_check(const MatrixPolynomial& p, double r_declared, const std::string& id = {},
                      double family_tol = kDefaultSrTol);

struct UnitCirclePoint {
    Complex point;
    double sigma_residual = 0.0;  ///< sigma_min(P(w)) / scale
    double null_residual = 0.0;   ///< ||P(w) e|| / (scale ||e||)
};

/// Confirms each w_j = exp(2 pi i j / (m+1)), j = 1..m, as an eigenvalue of a
/// polynomial with doubly stochastic coefficients. Throws FamilyError if a
/// coefficient is not doubly stochastic and TheoremViolation if a point fails.
std::vector<UnitCirclePoint> unit_circle_eigs(const MatrixPolynomial& p, double tol);

/// Largest remainder coefficient of det P(z) divided by 1 + z + ... + z^m.
double divisibility_check(const MatrixPolynomial& p);

/// Clusters under single linkage with the given distance threshold.
int distinct_count(std::span<const Complex> values, double cluster_tol);
int distinct_count(const Spectrum& s, double cluster_tol);
/// 1e-6 times the largest modulus (at least 1e-300).
double default_cluster_tol(const Spectrum& s);

/// Bottleneck distance between two equal-size multisets: the smallest d such
/// that a bijection moves no point further than d. Infinity if sizes differ.
double multiset_distance(std::span<const Complex> a, std::span<const Complex> b);

struct WitnessPoint {
    std::string kind;  ///< "inf", "sup", "schur-sup" or "zero"
    double parameter = 0.0;
    int parameter2 = 0;
    double modulus = 0.0;
};

struct SweepReport {
    EnsembleSpec spec;
    int random_instances = 0;
    double observed_min = 0.0;
    double observed_max = 0.0;
    std::vector<WitnessPoint> witnesses;
    double limit_inf = 0.0;
    double limit_sup = 0.0;
    bool pass = false;
};

/// Random instances of the family plus the deterministic witness sequence.
/// Throws TheoremViolation if any instance breaks its bound.
SweepReport sweep_extremes(const EnsembleSpec& spec);

}  // namespace polyloc
