#ifndef QLANDSCAPE_BLOCH_HPP
#define QLANDSCAPE_BLOCH_HPP

#include <cmath>

namespace qlandscape {

// Tolerances shared across the library.
namespace tol {
inline constexpr double structural = 1e-12;  // unitarity, Hermiticity, norm drift
inline constexpr double round_trip = 1e-14;  // exact algebraic identities
inline constexpr double coplanar = 1e-10;    // in-plane checks against the drift axis
} // namespace tol

/// Real 3-vector of Pauli coordinates (state, observable or coupling).
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr BlochVector() = default;
    constexpr BlochVector(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double norm2() const { return x * x + y * y + z * z; }

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }
    BlochVector operator-() const { return {-x, -y, -z}; }
};

inline BlochVector operator*(double s, const BlochVector& v) { return v * s; }

inline double dot(const BlochVector& a, const BlochVector& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline BlochVector cross(const BlochVector& a, const BlochVector& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Rotation of v by angle about the z axis (counterclockwise in the xy plane).
inline BlochVector rotate_z(const BlochVector& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

} // namespace qlandscape

#endif
