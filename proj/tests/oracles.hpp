// Test-only oracles, kept independent of the library's computation paths:
// a series/scaling-squaring matrix exponential and dense 2x2 conjugation.
#ifndef QLANDSCAPE_TESTS_ORACLES_HPP
#define QLANDSCAPE_TESTS_ORACLES_HPP

#include <cmath>
#include <random>

#include "qlandscape/su2.hpp"

namespace qlandscape::oracles {

inline Mat2 mat2_add(const Mat2& a, const Mat2& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Mat2 mat2_scale(const Mat2& a, complexd s) {
    return {a[0] * s, a[1] * s, a[2] * s, a[3] * s};
}

inline double mat2_max_abs(const Mat2& a) {
    double m = 0.0;
    for (const complexd& x : a) m = std::max(m, std::abs(x));
    return m;
}

// exp(X) by scaling-and-squaring with a Taylor series on the scaled matrix.
inline Mat2 mat2_exp(Mat2 x) {
    int squarings = 0;
    while (mat2_max_abs(x) > 0.25) {
        x = mat2_scale(x, 0.5);
        ++squarings;
    }
    Mat2 result{complexd(1, 0), complexd(0, 0), complexd(0, 0), complexd(1, 0)};
    Mat2 term = result;
    for (int k = 1; k <= 30; ++k) {
        term = mat2_scale(mat2_mul(term, x), complexd(1.0 / k, 0));
        result = mat2_add(result, term);
        if (mat2_max_abs(term) < 1e-18) break;
    }
    for (int i = 0; i < squarings; ++i) result = mat2_mul(result, result);
    return result;
}

// exp(-i H dt) via the series oracle.
inline Mat2 expm_minus_i(const Hermitian2& h, double dt) {
    const Mat2 hd = pauli_compose(h);
    return mat2_exp(mat2_scale(hd, complexd(0, -dt)));
}

// r' = Tr(U rho U^dag sigma) computed densely from rho = (I + r.sigma)/2.
inline BlochVector dense_conjugate_bloch(const Mat2& u, const BlochVector& r) {
    const Mat2 rho = pauli_compose(Hermitian2{0.5, 0.5 * r});
    const Mat2 m = mat2_mul(mat2_mul(u, rho), mat2_adjoint(u));
    return {2.0 * std::real(m[1]),                // Tr(M sigma_x)
            -2.0 * std::imag(m[1]),               // Tr(M sigma_y)  (M Hermitian)
            std::real(m[0]) - std::real(m[3])};   // Tr(M sigma_z)
}

inline Hermitian2 random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), {u(rng), u(rng), u(rng)}};
}

inline BlochVector random_unit_ball(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (true) {
        const BlochVector v{u(rng), u(rng), u(rng)};
        if (v.norm() <= 1.0) return v;
    }
}

} // namespace qlandscape::oracles

#endif
