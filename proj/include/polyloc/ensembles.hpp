#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "polyloc/matpoly.hpp"

namespace polyloc {

enum class Family { DoublyStochastic, SchurStable };

std::string to_string(Family f);

/// Parameters of a random verification campaign.
struct EnsembleSpec {
    Family family = Family::DoublyStochastic;
    int n = 2;
    int m = 2;
    double r = 1.0;     ///< spectral-radius bound, SchurStable only
    int k = 0;          ///< Birkhoff terms per coefficient; 0 means n*n
    int trials = 0;
    std::uint64_t seed = 0;

    void validate() const;
    int birkhoff_terms() const noexcept { return k > 0 ? k : n * n; }
};

// --- doubly stochastic family D -------------------------------------------

ComplexMatrix random_permutation(int n, std::uint64_t seed);

/// Convex combination of k seeded random permutations with flat-Dirichlet weights.
ComplexMatrix random_doubly_stochastic(int n, int k, std::uint64_t seed);

/// A_0 and A_m random permutations, interior coefficients random doubly
/// stochastic with k Birkhoff terms (k = 0 selects n*n).
MatrixPolynomial random_D_polynomial(int n, int m, int k, std::uint64_t seed);

/// Random polynomial whose coefficients are all doubly stochastic (no
/// permutation requirement on A_0 or A_m, so A_m may be singular).
MatrixPolynomial random_ds_coefficients(int n, int m, int k, std::uint64_t seed);

bool is_doubly_stochastic(const ComplexMatrix& a, double tol);
bool is_permutation(const ComplexMatrix& a, double tol);
bool validate_D(const MatrixPolynomial& p, double tol);

// --- commuting spectral-radius family S_r ----------------------------------

/// Monic polynomial with coefficients U T_i U^*, where the T_i form a
/// commuting upper triangular family with diagonal entries uniform in the
/// disc of radius 0.95 r and off-diagonal entries of modulus at most r.
MatrixPolynomial random_commuting_sr(int n, int m, double r, std::uint64_t seed);

/// Monic polynomial I z^m + sum_i (U T_i U^*) z^i for caller-supplied
/// triangular (or any commuting) T_0..T_{m-1}.
MatrixPolynomial assemble_commuting(const ComplexMatrix& u, std::span<const ComplexMatrix> triangular);

struct SrCheck {
    bool monic = false;
    bool commuting = false;
    bool radius = false;
    double max_commutator = 0.0;  ///< max ||A_i A_j - A_j A_i||_2 / max ||A_i||_2^2
    double r_eff = 0.0;           ///< max spectral radius over A_0..A_{m-1}

    bool ok() const noexcept { return monic && commuting && radius; }
    /// Name of the first failing predicate, or empty when ok().
    std::string failed_predicate() const;
};

SrCheck check_sr(const MatrixPolynomial& p, double r, double tol);
bool validate_sr(const MatrixPolynomial& p, double r, double tol);

// --- extremal constructions --------------------------------------------------

struct InfWitness {
    MatrixPolynomial poly;
    int d;
};

/// Smallest d with r + r^2 + ... + r^d > 1, and the 2x2-block polynomial
/// I z^d + ... + I z + I'. Requires 1/2 < r < 1.
InfWitness extremal_inf_witness(double r);

/// I z^m + I' z^{m-1} + ... + I' z + I' over 2x2 blocks.
MatrixPolynomial extremal_sup_witness(int m);

/// I z^m + A z^{m-1} + ... + A with A = -(r - 1/n_param) I_2.
MatrixPolynomial schur_sup_witness(int m, int n_param, double r);

/// I z^2 + [[0,0],[-n,0]] z + [[0,-n],[0,0]]; coefficients are nilpotent but
/// do not commute.
MatrixPolynomial noncommuting_counterexample(int n_param);

/// I z^2 + 10 T z + 5 T with T = tridiag(-1, 3, -1) of order n.
MatrixPolynomial mass_spring(int n);

/// tridiag(-1, 3, -1)
ComplexMatrix mass_spring_stiffness(int n);

/// [[0,1],[1,0]]
ComplexMatrix swap_matrix();

}  // namespace polyloc
