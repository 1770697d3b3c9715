#include "qlandscape/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace qlandscape {

namespace {

double off_diagonal_norm2(const SymmetricMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j) s += m.at(i, j) * m.at(i, j);
    return 2.0 * s;
}

} // namespace

std::vector<double> jacobi_eigenvalues(SymmetricMatrix m) {
    const std::size_t n = m.n;
    if (n == 0) return {};
    if (n == 1) return {m.at(0, 0)};

    double frob2 = 0.0;
    for (double x : m.a) frob2 += x * x;
    const double stop2 = 1e-24 * frob2; // (1e-12 * ||A||_F)^2

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm2(m) > stop2; ++sweep) {
        for (std::size_t p = 0; p < n - 1; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                const double t =
                    (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = m.at(p, p), aqq = m.at(q, q);
                m.at(p, p) = app - t * apq;
                m.at(q, q) = aqq + t * apq;
                m.at(p, q) = 0.0;
                m.at(q, p) = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = m.at(i, p), aiq = m.at(i, q);
                    m.at(i, p) = c * aip - s * aiq;
                    m.at(p, i) = m.at(i, p);
                    m.at(i, q) = s * aip + c * aiq;
                    m.at(q, i) = m.at(i, q);
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = m.at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace qlandscape
