#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "polyloc/verify.hpp"

using namespace polyloc;
using namespace testing_helpers;

TEST(CauchyBound, Examples) {
    EXPECT_DOUBLE_EQ(cauchy_bound(ScalarPolynomial({-1.0, 1.0, 1.0})), 2.0);
    EXPECT_DOUBLE_EQ(cauchy_bound(ScalarPolynomial({-1.0, 1.0})), 2.0);
    EXPECT_DOUBLE_EQ(cauchy_bound(ScalarPolynomial({20.0, 40.0, 1.0})), 41.0);
    const std::vector<Complex> zero_lead{1.0, 0.0};
    EXPECT_THROW(cauchy_bound(zero_lead), DegreeError);
    EXPECT_THROW(cauchy_bound(ScalarPolynomial({3.0})), DegreeError);
}

TEST(CauchyBound, DominatesRoots) {
    CounterRng rng(31, 0);
    for (int t = 0; t < 100; ++t) {
        const int degree = 1 + static_cast<int>(rng.below(10));
        std::vector<Complex> c;
        for (int i = 0; i <= degree; ++i) c.push_back(rng.in_disc(10.0));
        const double bound = cauchy_bound(std::span<const Complex>(c));
        for (const auto& z : scalar_roots(c).eigenvalues) EXPECT_LE(std::abs(z), bound + 1e-8);
    }
}

TEST(AnnulusCheck, Examples) {
    const AnnulusReport q = annulus_check(extremal_sup_witness(2), "q2");
    EXPECT_TRUE(q.pass);
    const auto mod = sorted_moduli(q.eigenvalues);
    EXPECT_NEAR(mod[0], 0.6180339887, 1e-8);
    EXPECT_NEAR(mod[3], 1.6180339887, 1e-8);

    const AnnulusReport lin = annulus_check(MatrixPolynomial({swap2(), eye(2)}));
    EXPECT_TRUE(lin.pass);
    EXPECT_NEAR(lin.inner_margin, 0.5, 1e-12);
    EXPECT_NEAR(lin.outer_margin, 1.0, 1e-12);

    const ComplexMatrix half = ComplexMatrix::Constant(2, 2, 0.5);
    EXPECT_THROW(annulus_check(MatrixPolynomial({half, eye(2), eye(2)})), FamilyError);
}

TEST(AnnulusCheck, RandomInstancesStayInside) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        const int m = 2 + static_cast<int>(seed % 4);
        const AnnulusReport rep = annulus_check(random_D_polynomial(n, m, 0, seed));
        EXPECT_TRUE(rep.pass);
        EXPECT_GT(rep.inner_margin, 0.0);
        EXPECT_GT(rep.outer_margin, 0.0);
    }
}

TEST(DiscCheck, Examples) {
    const DiscReport w = disc_check(schur_sup_witness(5, 10, 1.0), 1.0);
    EXPECT_TRUE(w.pass);
    EXPECT_GT(w.margin, 0.0);
    EXPECT_NEAR(w.r_eff, 0.9, 1e-12);

    const DiscReport ms = disc_check(mass_spring(2), 50.0);
    EXPECT_TRUE(ms.pass);
    EXPECT_NEAR(ms.max_modulus, 39.4936, 1e-3);
    EXPECT_LT(ms.max_modulus, 51.0);
    EXPECT_NEAR(ms.r_eff, 40.0, 1e-9);

    try {
        disc_check(noncommuting_counterexample(8), 1.0);
        FAIL();
    } catch (const FamilyError& e) {
        EXPECT_EQ(e.predicate(), "commutativity");
    }
}

TEST(DiscCheck, RandomInstancesRespectBound) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const double r = 0.5 * static_cast<double>(1 + seed % 4);
        const DiscReport rep = disc_check(random_commuting_sr(1 + seed % 5, 1 + seed % 4, r, seed), r);
        EXPECT_TRUE(rep.pass);
        EXPECT_LE(rep.r_eff, r);
    }
}

TEST(UnitCircle, Examples) {
    const auto lin = unit_circle_eigs(random_ds_coefficients(3, 1, 0, 4), 1e-8);
    ASSERT_EQ(lin.size(), 1u);
    EXPECT_NEAR(std::abs(lin[0].point - Complex(-1.0)), 0.0, 1e-15);

    const auto quad = unit_circle_eigs(extremal_sup_witness(2), 1e-8);
    ASSERT_EQ(quad.size(), 2u);
    for (const auto& pt : quad) EXPECT_NEAR(std::abs(pt.point * pt.point * pt.point - 1.0), 0.0, 1e-14);
    // The cube roots of unity also appear in the spectrum.
    int on_circle = 0;
    for (const auto& z : polyeig(extremal_sup_witness(2)).eigenvalues) on_circle += std::abs(std::abs(z) - 1.0) < 1e-6;
    EXPECT_EQ(on_circle, 2);

    ComplexMatrix neg(2, 2);
    neg << 1.1, -0.1, -0.1, 1.1;
    EXPECT_THROW(unit_circle_eigs(MatrixPolynomial({eye(2), neg}), 1e-8), FamilyError);
}

TEST(UnitCircle, SingularLeadingCoefficient) {
    const ComplexMatrix half = ComplexMatrix::Constant(2, 2, 0.5);
    const MatrixPolynomial p({random_doubly_stochastic(2, 3, 1), random_doubly_stochastic(2, 3, 2), half});
    EXPECT_THROW(polyeig(p), SingularLeadingError);
    EXPECT_EQ(unit_circle_eigs(p, 1e-8).size(), 2u);
}

TEST(UnitCircle, DistinctOnCircleAtLeastM) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const int m = 1 + static_cast<int>(seed % 5);
        const MatrixPolynomial p = random_D_polynomial(n, m, 0, seed);
        EXPECT_EQ(unit_circle_eigs(p, 1e-8).size(), static_cast<std::size_t>(m));
        std::vector<Complex> circle;
        for (const auto& z : polyeig(p).eigenvalues)
            if (std::abs(std::abs(z) - 1.0) < 1e-6) circle.push_back(z);
        EXPECT_GE(distinct_count(circle, 1e-6), m);
    }
}

TEST(Divisibility, Examples) {
    EXPECT_LE(divisibility_check(extremal_sup_witness(2)), 1e-12);
    EXPECT_LE(divisibility_check(MatrixPolynomial({swap2(), eye(2)})), 1e-12);
    const MatrixPolynomial p = random_ds_coefficients(3, 3, 0, 8);
    EXPECT_LE(divisibility_check(p), 1e-7 * det_poly(p).max_abs_coeff());
    // A polynomial outside the family is generally not divisible.
    CounterRng rng(1, 1);
    const MatrixPolynomial g({gaussian(2, rng), gaussian(2, rng), eye(2)});
    EXPECT_GT(divisibility_check(g), 1e-3);
}

TEST(DistinctCount, Examples) {
    const std::vector<Complex> v{1.0, 1.0 + 1e-12, 2.0};
    EXPECT_EQ(distinct_count(v, 1e-9), 2);
    EXPECT_EQ(distinct_count(polyeig(extremal_sup_witness(2)), 1e-6), 4);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const MatrixPolynomial p = random_D_polynomial(2 + seed % 4, 2 + seed % 3, 0, seed);
        EXPECT_GE(distinct_count(polyeig(p), 1e-6), 2);
    }
    // Single linkage chains neighbours together.
    const std::vector<Complex> chain{0.0, 0.5, 1.0, 1.5, 5.0};
    EXPECT_EQ(distinct_count(chain, 0.6), 2);
}

TEST(MultisetDistance, RespectsMultiplicity) {
    const std::vector<Complex> a{1.0, 1.0, 2.0};
    const std::vector<Complex> b{1.0, 2.0, 2.0};
    EXPECT_DOUBLE_EQ(multiset_distance(a, b), 1.0);
    const std::vector<Complex> c{2.0, 1.0 + 1e-9, 1.0};
    EXPECT_NEAR(multiset_distance(a, c), 1e-9, 1e-15);
    EXPECT_TRUE(std::isinf(multiset_distance(a, std::vector<Complex>{1.0})));
}

TEST(Sweep, DoublyStochasticWitnessesOnly) {
    EnsembleSpec spec;
    spec.family = Family::DoublyStochastic;
    spec.trials = 0;
    const SweepReport rep = sweep_extremes(spec);
    EXPECT_TRUE(rep.pass);
    double sup12 = 0.0;
    double inf051 = 1.0;
    for (const auto& w : rep.witnesses) {
        if (w.kind == "sup" && w.parameter <= 12) sup12 = std::max(sup12, w.modulus);
        if (w.kind == "inf" && w.parameter == 0.51) inf051 = w.modulus;
    }
    EXPECT_GE(sup12, 1.999);
    EXPECT_LT(inf051, 0.56);
    EXPECT_GT(inf051, 0.5);
    EXPECT_GE(rep.observed_min, 0.5 - kStrictPad);
    EXPECT_LE(rep.observed_max, 2.0 + kStrictPad);
}

TEST(Sweep, SupWitnessMonotone) {
    double prev = 0.0;
    for (int m = 1; m <= 12; ++m) {
        const double hi = polyeig(extremal_sup_witness(m)).max_modulus();
        EXPECT_GT(hi, prev);
        EXPECT_LT(hi, 2.0);
        EXPECT_NEAR(hi, oracle::largest_root_w(m, 1.0), 1e-8);
        prev = hi;
    }
}

TEST(Sweep, SchurStableWithTrials) {
    EnsembleSpec spec;
    spec.family = Family::SchurStable;
    spec.n = 3;
    spec.m = 3;
    spec.r = 1.0;
    spec.trials = 20;
    spec.seed = 5;
    const SweepReport rep = sweep_extremes(spec);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.limit_sup, 2.0);
    EXPECT_LE(rep.observed_min, 1e-8);
    double best = 0.0;
    for (const auto& w : rep.witnesses)
        if (w.kind == "schur-sup") best = std::max(best, w.modulus);
    EXPECT_NEAR(best, oracle::largest_root_w(64, 1.0 - 1.0 / 64), 1e-8);
}

TEST(Sweep, RejectsBadSpec) {
    EnsembleSpec spec;
    spec.family = Family::SchurStable;
    spec.r = -1.0;
    EXPECT_THROW(sweep_extremes(spec), DomainError);
}
