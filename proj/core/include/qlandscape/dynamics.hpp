#ifndef QLANDSCAPE_DYNAMICS_HPP
#define QLANDSCAPE_DYNAMICS_HPP

#include <vector>

#include "qlandscape/su2.hpp"

namespace qlandscape {

/// Drift + coupling pair of the bilinear Schroedinger equation
/// i dU/dt = (H0 + f(t) V) U. The drift defaults to sigma_z.
struct QubitSystem {
    Hermitian2 h0 = Hermitian2::sigma_z();
    Hermitian2 v;

    QubitSystem() = default;
    QubitSystem(Hermitian2 h0_, Hermitian2 v_);

    /// Planar system: drift sigma_z, coupling v_x sigma_x + v_y sigma_y.
    static QubitSystem planar(double v_x, double v_y);
};

/// Uniform time grid with piecewise-constant control values.
struct ControlGrid {
    double T = 1.0;
    std::vector<double> f; // one value per interval, n = f.size()

    ControlGrid() = default;
    ControlGrid(double T_, std::size_t n, double fill = 0.0);
    ControlGrid(double T_, std::vector<double> values);

    std::size_t n() const { return f.size(); }
    double dt() const { return T / static_cast<double>(f.size()); }
};

/// Initial state, observable and final time of the objective
/// J[f] = Tr(U_T rho0 U_T^dag A).
struct ControlTask {
    QubitSystem system;
    Hermitian2 rho0; // density matrix: c0 = 1/2, |c| <= 1/2
    Hermitian2 obs;  // observable A
    double T = 1.0;

    ControlTask() = default;
    ControlTask(QubitSystem sys, Hermitian2 rho0_, Hermitian2 obs_, double T_);

    /// Paper-coordinate vectors: r0 = Tr(rho0 sigma), a = Tr(A sigma),
    /// v = (1/2) Tr(V sigma), h0 = Tr(H0 sigma).
    BlochVector r0_vec() const { return 2.0 * rho0.c; }
    BlochVector a_vec() const { return 2.0 * obs.c; }
    BlochVector v_vec() const { return system.v.c; }
    BlochVector h0_vec() const { return 2.0 * system.h0.c; }
    double tr_A() const { return obs.trace(); }
};

struct PropagationResult {
    Unitary2 final;
    std::vector<Unitary2> checkpoints; // size n+1, checkpoints[0] = I
};

/// Exact piecewise-constant propagation: each interval contributes the
/// closed-form SU(2) exponential of H0 + f_k V.
PropagationResult propagate(const QubitSystem& system, const ControlGrid& grid);

/// J[f] = Tr(U_T rho0 U_T^dag A) = (Tr A + a . r(T)) / 2.
double objective(const ControlTask& task, const ControlGrid& grid);

/// Functional derivative dJ/df(t) sampled on the grid: the exact partial
/// derivative of the discrete objective w.r.t. f_k, divided by dt. Matches
/// (v x r(t)) . a~(t) at interval midpoints to O(dt^2).
std::vector<double> gradient(const ControlTask& task, const ControlGrid& grid);

/// r(t_k) at the n+1 grid nodes.
std::vector<BlochVector> bloch_trajectory(const ControlTask& task, const ControlGrid& grid);

} // namespace qlandscape

#endif
