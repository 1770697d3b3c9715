#ifndef QLANDSCAPE_SU2_HPP
#define QLANDSCAPE_SU2_HPP

#include <array>
#include <complex>

#include "qlandscape/bloch.hpp"

namespace qlandscape {

using complexd = std::complex<double>;

/// Dense 2x2 complex matrix in row-major order {m00, m01, m10, m11}.
using Mat2 = std::array<complexd, 4>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_adjoint(const Mat2& m);
complexd mat2_trace(const Mat2& m);

/// 2x2 Hermitian operator M = c0*I + c.sigma, stored in Pauli coordinates.
/// Tr M = 2*c0 and Tr(M sigma_k) = 2*c_k, so Hermiticity is structural.
struct Hermitian2 {
    double c0 = 0.0;
    BlochVector c;

    constexpr Hermitian2() = default;
    constexpr Hermitian2(double c0_, BlochVector c_) : c0(c0_), c(c_) {}

    Hermitian2 operator+(const Hermitian2& o) const { return {c0 + o.c0, c + o.c}; }
    Hermitian2 operator*(double s) const { return {c0 * s, c * s}; }

    double trace() const { return 2.0 * c0; }

    static constexpr Hermitian2 identity() { return {1.0, {0, 0, 0}}; }
    static constexpr Hermitian2 sigma_x() { return {0.0, {1, 0, 0}}; }
    static constexpr Hermitian2 sigma_y() { return {0.0, {0, 1, 0}}; }
    static constexpr Hermitian2 sigma_z() { return {0.0, {0, 0, 1}}; }
};

/// 2x2 unitary stored dense; composition stays branch-free this way.
struct Unitary2 {
    Mat2 m{complexd(1, 0), complexd(0, 0), complexd(0, 0), complexd(1, 0)};

    static Unitary2 identity() { return {}; }

    Unitary2 operator*(const Unitary2& o) const { return {mat2_mul(m, o.m)}; }
    Unitary2 adjoint() const { return {mat2_adjoint(m)}; }

    /// Max deviation of U^dag U from the identity, entrywise.
    double unitarity_defect() const;
};

/// Pauli-basis expansion of a dense matrix; throws NonHermitianInput if the
/// entries deviate from Hermiticity by more than tol::structural.
Hermitian2 pauli_decompose(const Mat2& m);

/// Inverse of pauli_decompose: dense entries of c0*I + c.sigma.
Mat2 pauli_compose(const Hermitian2& h);

/// Closed-form exp(-i*(c0*I + c.sigma)*dt) =
/// e^{-i c0 dt} (cos(|c| dt) I - i sin(|c| dt) chat.sigma).
Unitary2 expi(const Hermitian2& h, double dt);

/// Bloch image of conjugation: r' with (I + r'.sigma)/2 = U (I + r.sigma)/2 U^dag.
/// Implemented as the quaternion rotation of the phase-stripped SU(2) part,
/// so it is an independent route from dense conjugation.
BlochVector conjugate_bloch(const Unitary2& u, const BlochVector& r);

} // namespace qlandscape

#endif
