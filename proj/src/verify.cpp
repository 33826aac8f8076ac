#include "polyloc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace polyloc {

double cauchy_bound(std::span<const Complex> coeffs) {
    if (coeffs.size() < 2) {
        throw DegreeError("cauchy_bound: polynomial degree must be at least 1");
    }
    const double lead = std::abs(coeffs.back());
    if (lead == 0.0) {
        throw DegreeError("cauchy_bound: leading coefficient is zero");
    }
    double ratio = 0.0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        ratio = std::max(ratio, std::abs(coeffs[i]) / lead);
    }
    return 1.0 + ratio;
}

double cauchy_bound(const ScalarPolynomial& p) { return cauchy_bound(std::span(p.coeffs())); }

AnnulusReport annulus_check(const MatrixPolynomial& p, const std::string& id, double family_tol) {
    if (!validate_D(p, family_tol)) {
        throw FamilyError("family D",
                          "annulus_check: coefficients must be doubly stochastic with permutation "
                          "end coefficients");
    }
    const Spectrum s = polyeig(p);
    AnnulusReport out;
    out.id = id;
    out.eigenvalues = s.eigenvalues;
    out.moduli = s.moduli();
    out.inner_margin = s.min_modulus() - kAnnulusInner;
    out.outer_margin = kAnnulusOuter - s.max_modulus();
    out.pass = out.inner_margin > -kStrictPad && out.outer_margin > -kStrictPad;
    return out;
}

DiscReport disc_check(const MatrixPolynomial& p, double r_declared, const std::string& id,
                      double family_tol) {
    const SrCheck check = check_sr(p, r_declared, family_tol);
    if (!check.ok()) {
        throw FamilyError(check.failed_predicate(),
                          "disc_check: hypothesis failed (" + check.failed_predicate() + ")");
    }
    const Spectrum s = polyeig(p);
    DiscReport out;
    out.id = id;
    out.eigenvalues = s.eigenvalues;
    out.r_declared = r_declared;
    out.r_eff = check.r_eff;
    out.bound = check.r_eff + 1.0;
    out.max_modulus = s.max_modulus();
    out.margin = out.bound - out.max_modulus;
    out.pass = out.margin > -kStrictPad;
    return out;
}

std::vector<UnitCirclePoint> unit_circle_eigs(const MatrixPolynomial& p, double tol) {
    for (int i = 0; i <= p.degree(); ++i) {
        if (!is_doubly_stochastic(p.coeff(i), tol)) {
            throw FamilyError("doubly stochastic",
                              "unit_circle_eigs: coefficient " + std::to_string(i) +
                                  " is not doubly stochastic");
        }
    }
    const int m = p.degree();
    const int n = p.size();
    const ComplexVector ones = ComplexVector::Ones(n);
    const double scale = p.coefficient_scale();
    std::vector<UnitCirclePoint> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * j / (m + 1));
        const ComplexMatrix pw = evaluate(p, w);
        UnitCirclePoint pt{w, sigma_min(pw) / scale, (pw * ones).norm() / (scale * ones.norm())};
        if (!(pt.sigma_residual <= tol) || !(pt.null_residual <= tol)) {
            throw TheoremViolation("unit_circle_eigs: root of unity " + std::to_string(j) + " of " +
                                   std::to_string(m + 1) + " is not an eigenvalue (sigma " +
                                   std::to_string(pt.sigma_residual) + ", null " +
                                   std::to_string(pt.null_residual) + ")");
        }
        out.push_back(pt);
    }
    return out;
}

double divisibility_check(const MatrixPolynomial& p) {
    const ScalarPolynomial d = det_poly(p);
    if (d.is_zero()) {
        return 0.0;
    }
    return d.divide(ScalarPolynomial::geometric(p.degree())).second.max_abs_coeff();
}

int distinct_count(std::span<const Complex> values, double cluster_tol) {
    const std::size_t k = values.size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int clusters = static_cast<int>(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (std::abs(values[i] - values[j]) <= cluster_tol) {
                const auto a = find(i);
                const auto b = find(j);
                if (a != b) {
                    parent[a] = b;
                    --clusters;
                }
            }
        }
    }
    return clusters;
}

int distinct_count(const Spectrum& s, double cluster_tol) {
    return distinct_count(std::span(s.eigenvalues), cluster_tol);
}

double default_cluster_tol(const Spectrum& s) { return std::max(1e-6 * s.max_modulus(), 1e-300); }

double multiset_distance(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    const std::size_t k = a.size();
    if (k == 0) {
        return 0.0;
    }
    std::vector<double> dist(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            dist[i * k + j] = std::abs(a[i] - b[j]);
        }
    }
    std::vector<double> candidates = dist;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Perfect matching using only edges of length <= limit (Kuhn's algorithm).
    auto has_perfect_matching = [&](double limit) {
        std::vector<std::ptrdiff_t> match(k, -1);
        std::vector<char> seen(k);
        auto augment = [&](auto&& self, std::size_t i) -> bool {
            for (std::size_t j = 0; j < k; ++j) {
                if (dist[i * k + j] <= limit && !seen[j]) {
                    seen[j] = 1;
                    if (match[j] < 0 || self(self, static_cast<std::size_t>(match[j]))) {
                        match[j] = static_cast<std::ptrdiff_t>(i);
                        return true;
                    }
                }
            }
            return false;
        };
        for (std::size_t i = 0; i < k; ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            if (!augment(augment, i)) {
                return false;
            }
        }
        return true;
    };

    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (has_perfect_matching(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

namespace {

struct Extremes {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;

    void add(double min_mod, double max_mod) {
        lo = std::min(lo, min_mod);
        hi = std::max(hi, max_mod);
    }
};

void require_pass(bool pass, const std::string& what) {
    if (!pass) {
        throw TheoremViolation("sweep_extremes: " + what + " violates its bound");
    }
}

void sweep_doubly_stochastic(const EnsembleSpec& spec, SweepReport& out, Extremes& ext) {
    for (int t = 0; t < spec.trials; ++t) {
        const auto seed = spec.seed + static_cast<std::uint64_t>(t);
        const auto rep = annulus_check(random_D_polynomial(spec.n, spec.m, spec.k, seed));
        require_pass(rep.pass, "random D instance with seed " + std::to_string(seed));
        ext.add(kAnnulusInner + rep.inner_margin, kAnnulusOuter - rep.outer_margin);
    }
    for (double r : {0.9, 0.8, 0.7, 0.62, 0.6, 0.55, 0.52, 0.51, 0.505, 0.501}) {
        const auto w = extremal_inf_witness(r);
        const auto rep = annulus_check(w.poly);
        require_pass(rep.pass, "inf witness r=" + std::to_string(r));
        const double lo = kAnnulusInner + rep.inner_margin;
        ext.add(lo, kAnnulusOuter - rep.outer_margin);
        out.witnesses.push_back({"inf", r, w.d, lo});
    }
    for (int m : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 24, 32, 48, 64}) {
        const auto rep = annulus_check(extremal_sup_witness(m));
        require_pass(rep.pass, "sup witness m=" + std::to_string(m));
        const double hi = kAnnulusOuter - rep.outer_margin;
        ext.add(kAnnulusInner + rep.inner_margin, hi);
        out.witnesses.push_back({"sup", static_cast<double>(m), 0, hi});
    }
    out.limit_inf = kAnnulusInner;
    out.limit_sup = kAnnulusOuter;
}

void sweep_schur_stable(const EnsembleSpec& spec, SweepReport& out, Extremes& ext) {
    const double r = spec.r;
    auto record = [&](const DiscReport& rep) {
        double lo = std::numeric_limits<double>::infinity();
        for (const auto& z : rep.eigenvalues) {
            lo = std::min(lo, std::abs(z));
        }
        ext.add(lo, rep.max_modulus);
        return lo;
    };
    for (int t = 0; t < spec.trials; ++t) {
        const auto seed = spec.seed + static_cast<std::uint64_t>(t);
        const auto p = random_commuting_sr(spec.n, spec.m, r, seed);
        const auto rep = disc_check(p, r);
        require_pass(rep.pass, "random S_r instance with seed " + std::to_string(seed));
        record(rep);
    }
    for (int m : {1, 2, 4, 8, 16, 32, 64}) {
        for (int n_param : {1, 2, 4, 8, 16, 32, 64}) {
            if (r < 1.0 / n_param) {
                continue;
            }
            const auto rep = disc_check(schur_sup_witness(m, n_param, r), r);
            require_pass(rep.pass, "schur-sup witness m=" + std::to_string(m) +
                                       " n=" + std::to_string(n_param));
            record(rep);
            out.witnesses.push_back({"schur-sup", static_cast<double>(m), n_param, rep.max_modulus});
        }
    }
    const MatrixPolynomial zero_poly({ComplexMatrix::Zero(2, 2), ComplexMatrix::Identity(2, 2)});
    const auto rep = disc_check(zero_poly, r);
    require_pass(rep.pass, "zero polynomial");
    out.witnesses.push_back({"zero", 1.0, 0, record(rep)});
    out.limit_inf = 0.0;
    out.limit_sup = r + 1.0;
}

}  // namespace

SweepReport sweep_extremes(const EnsembleSpec& spec) {
    spec.validate();
    SweepReport out;
    out.spec = spec;
    out.random_instances = spec.trials;
    Extremes ext;
    if (spec.family == Family::DoublyStochastic) {
        sweep_doubly_stochastic(spec, out, ext);
    } else {
        sweep_schur_stable(spec, out, ext);
    }
    out.observed_min = ext.lo;
    out.observed_max = ext.hi;
    out.pass = out.observed_min >= out.limit_inf - kStrictPad &&
               out.observed_max <= out.limit_sup + kStrictPad;
    return out;
}

}  // namespace polyloc
