#include "qlandscape/dynamics.hpp"

#include <cmath>

#include "qlandscape/errors.hpp"

namespace qlandscape {

namespace {

void check_time(double grid_T, double task_T) {
    if (std::abs(grid_T - task_T) > tol::structural * std::max(1.0, std::abs(task_T)))
        throw TimeMismatch("grid.T != task.T");
}

// (cos t - sin t / t) / t^2, the regular part of d(sinc)/dt / t.
double g2(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return -1.0 / 3.0 + t2 / 30.0 - t2 * t2 / 840.0;
    }
    return (std::cos(t) - std::sin(t) / t) / (t * t);
}

double sinc(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

// d/df exp(-i (c0(f) I + c(f).sigma) dt) with c = h + f*v, c0 = h00 + f*v00,
// evaluated in closed form (regular as |c| -> 0).
Mat2 expi_derivative(const Hermitian2& h0, const Hermitian2& v, double f, double dt) {
    const double c0 = h0.c0 + f * v.c0;
    const BlochVector c = h0.c + f * v.c;
    const double cn = c.norm();
    const double theta = cn * dt;
    const complexd p = std::exp(complexd(0, -c0 * dt));

    const double sc = sinc(theta);
    const double cv = dot(c, v.c);
    const double alpha = -sc * dt * dt * cv;          // d(cos theta)/df
    const double beta = g2(theta) * dt * dt * cv;     // d(sinc)/df

    const Mat2 cs = pauli_compose({0.0, c});
    const Mat2 vs = pauli_compose({0.0, v.c});
    const Mat2 e = expi(Hermitian2{c0, c}, dt).m;

    const complexd midt(0, -dt);
    Mat2 d;
    for (int i = 0; i < 4; ++i) {
        complexd ident = (i == 0 || i == 3) ? complexd(alpha, 0) : complexd(0, 0);
        d[i] = complexd(0, -v.c0 * dt) * e[i] +
               p * (ident + midt * (beta * cs[i] + sc * vs[i]));
    }
    return d;
}

} // namespace

QubitSystem::QubitSystem(Hermitian2 h0_, Hermitian2 v_) : h0(h0_), v(v_) {
    if (cross(h0.c, v.c).norm() <= tol::structural)
        throw Error("QubitSystem: drift and coupling commute");
}

QubitSystem QubitSystem::planar(double v_x, double v_y) {
    return QubitSystem(Hermitian2::sigma_z(), Hermitian2{0.0, {v_x, v_y, 0.0}});
}

ControlGrid::ControlGrid(double T_, std::size_t n, double fill) : T(T_), f(n, fill) {
    if (!(T > 0.0) || n < 1) throw Error("ControlGrid: need T > 0 and n >= 1");
}

ControlGrid::ControlGrid(double T_, std::vector<double> values) : T(T_), f(std::move(values)) {
    if (!(T > 0.0) || f.empty()) throw Error("ControlGrid: need T > 0 and n >= 1");
    for (double x : f)
        if (!std::isfinite(x)) throw Error("ControlGrid: non-finite control value");
}

ControlTask::ControlTask(QubitSystem sys, Hermitian2 rho0_, Hermitian2 obs_, double T_)
    : system(sys), rho0(rho0_), obs(obs_), T(T_) {
    if (std::abs(rho0.c0 - 0.5) > tol::structural)
        throw Error("ControlTask: rho0 must have unit trace (c0 = 1/2)");
    if (rho0.c.norm() > 0.5 * (1.0 + tol::structural))
        throw Error("ControlTask: rho0 Bloch vector exceeds unit ball");
    if (!(T > 0.0)) throw Error("ControlTask: need T > 0");
}

PropagationResult propagate(const QubitSystem& system, const ControlGrid& grid) {
    const std::size_t n = grid.n();
    const double dt = grid.dt();

    PropagationResult res;
    res.checkpoints.reserve(n + 1);
    res.checkpoints.push_back(Unitary2::identity());

    Unitary2 u = Unitary2::identity();
    for (std::size_t k = 0; k < n; ++k) {
        const Hermitian2 gen = system.h0 + system.v * grid.f[k];
        u = expi(gen, dt) * u;
        res.checkpoints.push_back(u);
    }
    res.final = u;
    return res;
}

double objective(const ControlTask& task, const ControlGrid& grid) {
    check_time(grid.T, task.T);
    const Unitary2 uT = propagate(task.system, grid).final;
    const BlochVector rT = conjugate_bloch(uT, task.r0_vec());
    return 0.5 * (task.tr_A() + dot(task.a_vec(), rT));
}

std::vector<double> gradient(const ControlTask& task, const ControlGrid& grid) {
    check_time(grid.T, task.T);
    const std::size_t n = grid.n();
    const double dt = grid.dt();

    const PropagationResult prop = propagate(task.system, grid);
    const Mat2 uT_dag = mat2_adjoint(prop.final.m);
    const Mat2 rho = pauli_compose(task.rho0);
    const Mat2 a = pauli_compose(task.obs);

    // dJ/df_k = 2 Re Tr(B_k E'_k A_k rho0 U_T^dag A), with A_k the prefix
    // product and B_k = U_T A_{k+1}^dag the suffix.
    const Mat2 rho_ut_a = mat2_mul(mat2_mul(rho, uT_dag), a);

    std::vector<double> g(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Mat2 dE = expi_derivative(task.system.h0, task.system.v, grid.f[k], dt);
        const Mat2 b = mat2_mul(prop.final.m, mat2_adjoint(prop.checkpoints[k + 1].m));
        const Mat2 left = mat2_mul(b, mat2_mul(dE, prop.checkpoints[k].m));
        const complexd tr = mat2_trace(mat2_mul(left, rho_ut_a));
        g[k] = 2.0 * std::real(tr) / dt; // functional derivative, not scaled by dt
    }
    return g;
}

std::vector<BlochVector> bloch_trajectory(const ControlTask& task, const ControlGrid& grid) {
    check_time(grid.T, task.T);
    const PropagationResult prop = propagate(task.system, grid);
    const BlochVector r0 = task.r0_vec();

    std::vector<BlochVector> traj;
    traj.reserve(prop.checkpoints.size());
    for (const Unitary2& u : prop.checkpoints) traj.push_back(conjugate_bloch(u, r0));
    return traj;
}

} // namespace qlandscape
