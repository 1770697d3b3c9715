#include "qlandscape/landscape.hpp"

#include <cmath>

#include "qlandscape/errors.hpp"
#include "qlandscape/jacobi.hpp"

namespace qlandscape {

namespace {

constexpr std::size_t kLambdaScanPoints = 1000;
constexpr double kDegenerateMag = 1e-14;

void check_domain(double t, double T, const char* what) {
    const double slack = tol::structural * std::max(1.0, T);
    if (t < -slack || t > T + slack) throw OutOfDomain(std::string(what) + ": time outside [0, T]");
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::saddle: return "saddle";
        case Verdict::trap_candidate_max: return "trap_candidate_max";
        case Verdict::trap_candidate_min: return "trap_candidate_min";
        case Verdict::global_max: return "global_max";
        case Verdict::global_min: return "global_min";
        case Verdict::not_critical: return "not_critical";
        case Verdict::objective_constant: return "objective_constant";
    }
    return "unknown";
}

HessianKernelSpec build_kernel_spec(const ControlTask& task) {
    const BlochVector h0 = task.h0_vec();
    const double h0n = h0.norm();
    if (h0n <= tol::structural) throw Error("build_kernel_spec: zero drift");
    const BlochVector axis = (1.0 / h0n) * h0;

    const BlochVector r0 = task.r0_vec();
    const BlochVector a = task.a_vec();
    const BlochVector v = task.v_vec();
    const double scale = std::max({1.0, r0.norm(), a.norm(), v.norm()});
    if (std::abs(dot(r0, axis)) > tol::coplanar * scale ||
        std::abs(dot(a, axis)) > tol::coplanar * scale ||
        std::abs(dot(v, axis)) > tol::coplanar * scale)
        throw NotCoplanar("build_kernel_spec: r0, a, v not orthogonal to h0");

    HessianKernelSpec spec;
    spec.T = task.T;
    spec.v2 = v.norm2();
    spec.phi = std::atan2(v.y, v.x);
    // Drift-only evolution at f = 0; for h0 = sigma_z this is the z-rotation
    // of r0 by angle 2T.
    spec.r = conjugate_bloch(expi(task.system.h0, task.T), r0);
    spec.a = a;
    spec.r_mag = std::hypot(spec.r.x, spec.r.y);
    spec.a_mag = std::hypot(a.x, a.y);
    if (spec.r_mag < kDegenerateMag || spec.a_mag < kDegenerateMag)
        throw ZeroInPlaneVector("build_kernel_spec: r or a has no in-plane component");
    spec.phi1 = std::atan2(spec.r.y, spec.r.x);
    spec.phi2 = std::atan2(a.y, a.x);
    return spec;
}

BlochVector rt_profile(double t, double phi) {
    return {std::sin(2.0 * t - phi), std::cos(2.0 * t - phi), 0.0};
}

double kernel_eval(const HessianKernelSpec& spec, double t2, double t1) {
    check_domain(t1, spec.T, "kernel_eval");
    check_domain(t2, spec.T, "kernel_eval");
    const double tmax = std::max(t1, t2);
    const double tmin = std::min(t1, t2);
    return -0.25 * spec.v2 * dot(spec.r, rt_profile(tmax, spec.phi)) *
           dot(spec.a, rt_profile(tmin, spec.phi));
}

double eq5_product(const HessianKernelSpec& spec, double lambda) {
    check_domain(lambda, spec.T, "eq5_product");
    return 0.5 * spec.r_mag * spec.a_mag *
           (std::cos(spec.phi1 - spec.phi2) -
            std::cos(4.0 * lambda - 2.0 * spec.phi + spec.phi1 + spec.phi2));
}

ControlGrid bump_control(double lambda, double eps, const ControlGrid& grid) {
    const double dt = grid.dt();
    const std::size_t n = grid.n();
    if (!(eps > 0.0) || eps >= grid.T || lambda <= 0.5 * eps || lambda >= grid.T - 0.5 * eps)
        throw BumpOutOfWindow("bump_control: need eps < T and eps/2 < lambda < T - eps/2");

    const double ratio = eps / dt;
    const double m_real = std::round(ratio);
    if (std::abs(ratio - m_real) > 1e-9 * std::max(1.0, ratio))
        throw EpsNotOnGrid("bump_control: eps must be an integer multiple of dt");
    const std::size_t m = static_cast<std::size_t>(m_real);

    // Snap the window start to the grid; exactly m intervals carry 1/eps so
    // the discrete integral is 1 exactly.
    auto k0s = static_cast<long>(std::llround((lambda - 0.5 * eps) / dt));
    k0s = std::max(0L, std::min(k0s, static_cast<long>(n - m)));
    const auto k0 = static_cast<std::size_t>(k0s);

    ControlGrid out(grid.T, n, 0.0);
    for (std::size_t k = k0; k < k0 + m; ++k) out.f[k] = 1.0 / eps;
    return out;
}

double quadratic_form(const HessianKernelSpec& spec, const ControlGrid& f) {
    if (std::abs(f.T - spec.T) > tol::structural * std::max(1.0, spec.T))
        throw TimeMismatch("quadratic_form: f.T != spec.T");
    const std::size_t n = f.n();
    const double dt = f.dt();

    // Midpoint rule per cell; only cells with nonzero control contribute.
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i)
        if (f.f[i] != 0.0) active.push_back(i);

    double sum = 0.0;
    for (std::size_t i : active) {
        const double ti = (static_cast<double>(i) + 0.5) * dt;
        for (std::size_t j : active)
            sum += f.f[i] * f.f[j] * kernel_eval(spec, ti, (static_cast<double>(j) + 0.5) * dt);
    }
    return sum * dt * dt;
}

std::vector<double> hessian_spectrum(const HessianKernelSpec& spec, std::size_t n) {
    if (n < 8) throw Error("hessian_spectrum: need n >= 8");
    const double h = spec.T / static_cast<double>(n - 1);

    std::vector<double> t(n), sqw(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = static_cast<double>(i) * h;
        const double w = (i == 0 || i == n - 1) ? 0.5 * h : h;
        sqw[i] = std::sqrt(w);
    }

    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double k = sqw[i] * sqw[j] * kernel_eval(spec, t[i], t[j]);
            m.at(i, j) = k;
            m.at(j, i) = k;
        }
    return jacobi_eigenvalues(std::move(m));
}

CriticalPointReport classify_critical_point(const ControlTask& task, std::size_t n, double tol) {
    CriticalPointReport rep;
    const double r0_mag = task.r0_vec().norm();
    const double a_mag = task.a_vec().norm();
    rep.J_global = 0.5 * (task.tr_A() + a_mag * r0_mag);

    const ControlGrid zero(task.T, n, 0.0);
    rep.J0 = objective(task, zero);

    const std::vector<double> g = gradient(task, zero);
    double gn2 = 0.0;
    for (double gi : g) gn2 += gi * gi;
    rep.grad_norm = std::sqrt(gn2 * zero.dt()); // L2 grid norm

    if (r0_mag < kDegenerateMag || a_mag < kDegenerateMag) {
        rep.verdict = Verdict::objective_constant;
        return rep;
    }
    if (rep.grad_norm > tol) {
        rep.verdict = Verdict::not_critical;
        return rep;
    }

    HessianKernelSpec spec;
    try {
        spec = build_kernel_spec(task);
    } catch (const NotCoplanar&) {
        rep.verdict = Verdict::not_critical;
        return rep;
    } catch (const ZeroInPlaneVector&) {
        rep.verdict = Verdict::objective_constant;
        return rep;
    }

    const double cos12 = std::cos(spec.phi1 - spec.phi2);
    if (cos12 >= 1.0 - tol) {
        rep.verdict = Verdict::global_max;
        return rep;
    }
    if (cos12 <= -1.0 + tol) {
        rep.verdict = Verdict::global_min;
        return rep;
    }

    // Bump-sign scan over one period of the diagonal product.
    const double lam_max = std::min(spec.T, M_PI / 2.0);
    double best_neg = 0.0, best_pos = 0.0, lam_neg = 0.0, lam_pos = 0.0;
    for (std::size_t i = 0; i < kLambdaScanPoints; ++i) {
        const double lam =
            lam_max * static_cast<double>(i) / static_cast<double>(kLambdaScanPoints - 1);
        const double p = eq5_product(spec, lam);
        if (p < best_neg) { best_neg = p; lam_neg = lam; }
        if (p > best_pos) { best_pos = p; lam_pos = lam; }
    }
    const double sig_tol = 1e-10 * spec.r_mag * spec.a_mag;

    const std::vector<double> eig = hessian_spectrum(spec, n);
    rep.min_eig = eig.front();
    rep.max_eig = eig.back();
    const double eig_tol = 1e-8 * 0.25 * spec.v2 * spec.r_mag * spec.a_mag * spec.T;

    const bool signs_on_diagonal = best_neg < -sig_tol && best_pos > sig_tol;
    const bool spectrum_indefinite = rep.min_eig < -eig_tol && rep.max_eig > eig_tol;
    if (signs_on_diagonal && spectrum_indefinite) {
        rep.verdict = Verdict::saddle;
        rep.lambda1 = lam_neg; // eq5 < 0 there, so the bump form is positive
        rep.lambda2 = lam_pos;
        return rep;
    }

    if (rep.max_eig <= eig_tol)
        rep.verdict = Verdict::trap_candidate_max;
    else if (rep.min_eig >= -eig_tol)
        rep.verdict = Verdict::trap_candidate_min;
    else {
        // Spectrum indefinite without a diagonal sign certificate; still a saddle.
        rep.verdict = Verdict::saddle;
        rep.lambda1 = lam_neg;
        rep.lambda2 = lam_pos;
    }
    return rep;
}

} // namespace qlandscape
