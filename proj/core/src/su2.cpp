#include "qlandscape/su2.hpp"

#include <cmath>
#include <stdexcept>

#include "qlandscape/errors.hpp"

namespace qlandscape {

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat2_adjoint(const Mat2& m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

complexd mat2_trace(const Mat2& m) { return m[0] + m[3]; }

double Unitary2::unitarity_defect() const {
    const Mat2 p = mat2_mul(mat2_adjoint(m), m);
    double d = 0.0;
    d = std::max(d, std::abs(p[0] - complexd(1, 0)));
    d = std::max(d, std::abs(p[1]));
    d = std::max(d, std::abs(p[2]));
    d = std::max(d, std::abs(p[3] - complexd(1, 0)));
    return d;
}

Hermitian2 pauli_decompose(const Mat2& m) {
    double defect = 0.0;
    defect = std::max(defect, std::abs(std::imag(m[0])));
    defect = std::max(defect, std::abs(std::imag(m[3])));
    defect = std::max(defect, std::abs(m[1] - std::conj(m[2])));
    if (defect > tol::structural)
        throw NonHermitianInput("pauli_decompose: input deviates from Hermiticity by " +
                                std::to_string(defect));

    Hermitian2 h;
    h.c0 = 0.5 * (std::real(m[0]) + std::real(m[3]));
    // Use the symmetrized off-diagonal so tiny non-Hermitian noise cancels.
    const complexd off = 0.5 * (m[1] + std::conj(m[2]));
    h.c.x = std::real(off);
    h.c.y = -std::imag(off);
    h.c.z = 0.5 * (std::real(m[0]) - std::real(m[3]));
    return h;
}

Mat2 pauli_compose(const Hermitian2& h) {
    return {complexd(h.c0 + h.c.z, 0), complexd(h.c.x, -h.c.y),
            complexd(h.c.x, h.c.y), complexd(h.c0 - h.c.z, 0)};
}

Unitary2 expi(const Hermitian2& h, double dt) {
    if (!std::isfinite(dt) || !h.c.finite() || !std::isfinite(h.c0))
        throw Error("expi: non-finite input");

    const double cn = h.c.norm();
    const double theta = cn * dt;
    const complexd phase = std::exp(complexd(0, -h.c0 * dt));

    // sin(theta)/|c| stays finite as |c| -> 0 (limit dt).
    const double s = (cn > 0.0) ? std::sin(theta) / cn : dt;
    const double co = std::cos(theta);

    Unitary2 u;
    u.m[0] = phase * complexd(co, -s * h.c.z);
    u.m[1] = phase * complexd(-s * h.c.y, -s * h.c.x);
    u.m[2] = phase * complexd(s * h.c.y, -s * h.c.x);
    u.m[3] = phase * complexd(co, s * h.c.z);
    return u;
}

BlochVector conjugate_bloch(const Unitary2& u, const BlochVector& r) {
    // Strip the global phase: det U = e^{2i theta}; V = U / e^{i theta} is in
    // SU(2) up to an overall sign, which the rotation does not see.
    const complexd det = u.m[0] * u.m[3] - u.m[1] * u.m[2];
    const complexd phase = std::sqrt(det);
    const complexd v00 = u.m[0] / phase;
    const complexd v01 = u.m[1] / phase;
    const complexd v11 = u.m[3] / phase;

    // V = q0 I - i q.sigma
    const double q0 = 0.5 * (std::real(v00) + std::real(v11));
    const BlochVector q{-std::imag(v01), -std::real(v01),
                        0.5 * (std::imag(v11) - std::imag(v00))};

    // Quaternion rotation: r' = (q0^2 - |q|^2) r + 2 (q.r) q + 2 q0 (q x r)
    const double qq = q.norm2();
    return (q0 * q0 - qq) * r + 2.0 * dot(q, r) * q + 2.0 * q0 * cross(q, r);
}

} // namespace qlandscape
