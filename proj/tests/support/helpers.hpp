#pragma once

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "polyloc/matpoly.hpp"
#include "polyloc/rng.hpp"

namespace testing_helpers {

using polyloc::Complex;
using polyloc::ComplexMatrix;
using polyloc::MatrixPolynomial;

inline ComplexMatrix swap2() {
    ComplexMatrix s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}

inline ComplexMatrix eye(int n) { return ComplexMatrix::Identity(n, n); }

inline ComplexMatrix gaussian(int n, polyloc::CounterRng& rng) {
    ComplexMatrix a(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a(i, j) = Complex(rng.normal(), rng.normal());
    return a;
}

inline MatrixPolynomial random_gaussian_poly(int n, int m, std::uint64_t seed) {
    polyloc::CounterRng rng(seed, 4242);
    std::vector<ComplexMatrix> c;
    for (int i = 0; i <= m; ++i) c.push_back(gaussian(n, rng));
    return MatrixPolynomial(std::move(c));
}

/// Entry (i, j) of P as an ascending scalar polynomial.
inline std::vector<std::vector<oracle::Poly>> entry_polys(const MatrixPolynomial& p) {
    const int n = p.size();
    std::vector<std::vector<oracle::Poly>> out(n, std::vector<oracle::Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& a : p.coeffs()) out[i][j].push_back(a(i, j));
    return out;
}

inline std::vector<double> sorted_moduli(const std::vector<Complex>& v) {
    std::vector<double> out;
    for (const auto& z : v) out.push_back(std::abs(z));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testing_helpers
