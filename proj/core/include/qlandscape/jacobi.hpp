#ifndef QLANDSCAPE_JACOBI_HPP
#define QLANDSCAPE_JACOBI_HPP

#include <cstddef>
#include <vector>

namespace qlandscape {

/// Dense real symmetric matrix in row-major storage.
struct SymmetricMatrix {
    std::size_t n = 0;
    std::vector<double> a; // n*n entries

    explicit SymmetricMatrix(std::size_t n_) : n(n_), a(n_ * n_, 0.0) {}
    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotation sweeps,
/// returned sorted ascending. Converged when the off-diagonal Frobenius norm
/// drops below 1e-12 times the Frobenius norm of the input.
std::vector<double> jacobi_eigenvalues(SymmetricMatrix m);

} // namespace qlandscape

#endif
