#pragma once

// Independent reference computations used to derive and cross-check expected
// values. Nothing here calls into the eigensolver or the interpolation code.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Poly = std::vector<Complex>;  // ascending coefficients

/// Root of a continuous f on [lo, hi] with sign change, to ~1e-15.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double eval_real(const std::vector<double>& asc, double x) {
    double acc = 0.0;
    for (auto it = asc.rbegin(); it != asc.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Largest real root of x^m - c (x^{m-1} + ... + 1), c > 0, located in (1, c + 1].
inline double largest_root_w(int m, double c) {
    std::vector<double> asc(static_cast<std::size_t>(m) + 1, -c);
    asc.back() = 1.0;
    if (m == 1) return c;
    return bisect([&](double x) { return eval_real(asc, x); }, std::max(1.0, c), c + 1.0);
}

/// Root in (1/2, 1) of x^d + ... + x - 1.
inline double inf_root_q(int d) {
    std::vector<double> asc(static_cast<std::size_t>(d) + 1, 1.0);
    asc[0] = -1.0;
    return bisect([&](double x) { return eval_real(asc, x); }, 0.5, 1.0);
}

inline std::pair<Complex, Complex> quadratic_roots(Complex a, Complex b, Complex c) {
    const Complex disc = std::sqrt(b * b - 4.0 * a * c);
    return {(-b + disc) / (2.0 * a), (-b - disc) / (2.0 * a)};
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly poly_add(const Poly& a, const Poly& b, double sign = 1.0) {
    Poly out(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
    return out;
}

/// det of an n x n matrix with polynomial entries, by Laplace expansion
/// along the first row.
inline Poly cofactor_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc{0.0};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(row);
        }
        acc = poly_add(acc, poly_mul(m[0][j], cofactor_det(minor)), (j % 2 == 0) ? 1.0 : -1.0);
    }
    return acc;
}

}  // namespace oracle
