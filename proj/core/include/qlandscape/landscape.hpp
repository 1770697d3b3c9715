#ifndef QLANDSCAPE_LANDSCAPE_HPP
#define QLANDSCAPE_LANDSCAPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qlandscape/dynamics.hpp"

namespace qlandscape {

/// Analytic data defining the Hessian integral kernel of the objective at
/// the zero control: Hess(t2,t1) = -(v^2/4) (r . r_max) (a . r_min).
struct HessianKernelSpec {
    double T = 0.0;
    double v2 = 0.0;   // |v|^2
    double phi = 0.0;  // atan2(v_y, v_x)
    BlochVector r;     // drift-evolved Bloch vector of rho0 at time T
    BlochVector a;     // Bloch vector of the observable
    double phi1 = 0.0; // atan2(r_y, r_x)
    double phi2 = 0.0; // atan2(a_y, a_x)
    double r_mag = 0.0;
    double a_mag = 0.0;
};

enum class Verdict {
    saddle,
    trap_candidate_max,
    trap_candidate_min,
    global_max,
    global_min,
    not_critical,
    objective_constant,
};

std::string to_string(Verdict v);

/// Classification of the zero control, with spectral and bump certificates.
struct CriticalPointReport {
    Verdict verdict = Verdict::not_critical;
    double grad_norm = 0.0;
    double min_eig = 0.0;
    double max_eig = 0.0;
    std::optional<double> lambda1; // bump center with positive quadratic form
    std::optional<double> lambda2; // bump center with negative quadratic form
    double J0 = 0.0;               // objective at f = 0
    double J_global = 0.0;         // (Tr A + |a||r0|)/2
};

/// Builds the kernel data for a coplanar task (r0, a, v orthogonal to h0).
/// Throws NotCoplanar otherwise, ZeroInPlaneVector when r or a has no
/// in-plane component (degenerate/constant objective).
HessianKernelSpec build_kernel_spec(const ControlTask& task);

/// The rotating in-plane profile (sin(2t - phi), cos(2t - phi), 0).
BlochVector rt_profile(double t, double phi);

/// Symmetric Hessian kernel value at (t2, t1), both in [0, T].
double kernel_eval(const HessianKernelSpec& spec, double t2, double t1);

/// Closed form of (r . r_lambda)(a . r_lambda):
/// (|r||a|/2) (cos(phi1 - phi2) - cos(4 lambda - 2 phi + phi1 + phi2)).
double eq5_product(const HessianKernelSpec& spec, double lambda);

/// Normalized rectangular pulse of width eps centered at lambda, sampled on
/// the grid: value 1/eps inside the window, 0 elsewhere; integrates to 1
/// exactly. eps must be an integer multiple of dt and the window must fit
/// inside (0, T).
ControlGrid bump_control(double lambda, double eps, const ControlGrid& grid);

/// (f, H f): double quadrature of the kernel against f (midpoint rule per cell).
double quadratic_form(const HessianKernelSpec& spec, const ControlGrid& f);

/// Eigenvalues of the symmetrized Nystrom discretization (trapezoid weights
/// on a uniform n-point grid), sorted ascending. Requires n >= 8.
std::vector<double> hessian_spectrum(const HessianKernelSpec& spec, std::size_t n);

/// Full classification of f = 0: gradient check, parallel-vector global
/// extremum branch, bump sign scan and Nystrom spectrum. tol gates the
/// gradient-norm and cos(phi1 - phi2) tests; eigenvalue signs use the
/// scale-relative tolerance 1e-8 * (v^2/4) |r||a| T.
CriticalPointReport classify_critical_point(const ControlTask& task, std::size_t n,
                                            double tol = 1e-8);

} // namespace qlandscape

#endif
