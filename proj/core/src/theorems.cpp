#include "qlandscape/theorems.hpp"

#include <cmath>

#include "qlandscape/errors.hpp"

namespace qlandscape {

namespace {

constexpr double kStrictMargin = 1e-10;

HypothesisStatus strict_positive(double value, double scale) {
    const double margin = kStrictMargin * std::max(scale, 1e-300);
    if (value > margin) return HypothesisStatus::holds;
    if (value < -margin) return HypothesisStatus::fails;
    return HypothesisStatus::boundary;
}

} // namespace

std::string to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::holds: return "holds";
        case HypothesisStatus::fails: return "fails";
        case HypothesisStatus::boundary: return "boundary";
    }
    return "unknown";
}

Theorem1Threshold theorem1_threshold(const Hermitian2& h0, const Hermitian2& v) {
    if (std::abs(v.trace()) > tol::structural)
        throw NonTracelessV("theorem1_threshold: Tr V must vanish");
    const double v2 = v.c.norm2();
    if (v2 <= 0.0) throw ZeroCoupling("theorem1_threshold: V = 0");

    Theorem1Threshold out;
    // Pauli form: Tr(H0 V) = 2 h.c (Tr V = 0), Tr V^2 = 2 |v.c|^2.
    out.f0 = -dot(h0.c, v.c) / v2;
    const BlochVector shifted = h0.c + out.f0 * v.c;
    const double norm = shifted.norm(); // spectral norm of the traceless generator
    if (norm <= tol::structural)
        throw DegenerateDrift("theorem1_threshold: shifted generator vanishes, T0 unbounded");
    out.T0 = M_PI / norm;
    return out;
}

TheoremReport theorem2_conditions(const BlochVector& r0, const BlochVector& a,
                                  const BlochVector& v, const BlochVector& h0, double T) {
    TheoremReport rep;
    rep.theorem_id = "T2";

    const double c2T = std::cos(2.0 * T), s2T = std::sin(2.0 * T);
    const double cond1 = (cross(v, r0).z * c2T + dot(v, r0) * s2T) * cross(v, a).z;
    const double cond2 = dot(r0, a) * s2T - cross(r0, a).z * c2T; // rhs - lhs > 0

    const double scale1 = v.norm2() * r0.norm() * a.norm();
    const double scale2 = r0.norm() * a.norm();

    rep.hypotheses.push_back({"cond1", cond1, strict_positive(cond1, scale1)});
    rep.hypotheses.push_back({"cond2", cond2, strict_positive(cond2, scale2)});

    const double h0n = h0.norm();
    double copl = 0.0;
    if (h0n > 0.0) {
        const BlochVector axis = (1.0 / h0n) * h0;
        copl = std::max({std::abs(dot(r0, axis)), std::abs(dot(a, axis)), std::abs(dot(v, axis))});
    }
    const double cscale = std::max({1.0, r0.norm(), a.norm(), v.norm()});
    rep.hypotheses.push_back({"coplanar", copl,
                              copl <= tol::coplanar * cscale ? HypothesisStatus::holds
                                                             : HypothesisStatus::fails});

    rep.all_hold = true;
    for (const auto& h : rep.hypotheses)
        if (h.status != HypothesisStatus::holds) rep.all_hold = false;
    rep.conclusion = rep.all_hold
                         ? "trap hypotheses hold at this T: f = 0 is a local maximum for some T* >= T"
                         : "trap hypotheses do not all hold at this T";

    rep.numbers["cond1_lhs"] = cond1;
    rep.numbers["cond2_lhs"] = cross(r0, a).z * c2T;
    rep.numbers["cond2_rhs"] = dot(r0, a) * s2T;
    rep.numbers["coplanarity_defect"] = copl;
    rep.numbers["T"] = T;
    return rep;
}

TheoremReport theorem3_certificate(const ControlTask& task, std::size_t n) {
    if (!(task.T > M_PI / 2.0))
        throw TimeTooShort("theorem3_certificate: requires T > pi/2");

    TheoremReport rep;
    rep.theorem_id = "T3";
    rep.hypotheses.push_back({"T > pi/2", task.T, HypothesisStatus::holds});

    const CriticalPointReport cls = classify_critical_point(task, n);
    rep.numbers["grad_norm"] = cls.grad_norm;
    rep.numbers["min_eig"] = cls.min_eig;
    rep.numbers["max_eig"] = cls.max_eig;
    rep.numbers["J0"] = cls.J0;
    rep.numbers["J_global"] = cls.J_global;

    rep.all_hold = cls.verdict != Verdict::trap_candidate_max &&
                   cls.verdict != Verdict::trap_candidate_min;
    rep.conclusion = "f = 0 classified as " + to_string(cls.verdict) +
                     (rep.all_hold ? "; not a trap" : "; INCONSISTENT with the T > pi/2 claim");

    if (cls.verdict == Verdict::saddle && cls.lambda1 && cls.lambda2) {
        // Evaluate the bump quadratic forms at the certified centers, with a
        // grid-aligned width small enough to keep both windows admissible.
        const HessianKernelSpec spec = build_kernel_spec(task);
        const std::size_t nb = 2000;
        ControlGrid grid(task.T, nb, 0.0);
        const double dt = grid.dt();
        double eps = std::max(dt, std::round(0.01 * task.T / dt) * dt);
        const double room =
            std::min({*cls.lambda1, *cls.lambda2, task.T - *cls.lambda1, task.T - *cls.lambda2});
        auto clamp_lambda = [&](double lam) {
            return std::min(std::max(lam, 0.5 * eps + dt), task.T - 0.5 * eps - dt);
        };
        if (2.0 * room <= eps + 2.0 * dt) eps = dt; // centers near the edge: narrowest bump
        const double l1 = clamp_lambda(*cls.lambda1);
        const double l2 = clamp_lambda(*cls.lambda2);
        rep.numbers["lambda1"] = l1;
        rep.numbers["lambda2"] = l2;
        rep.numbers["form_lambda1"] = quadratic_form(spec, bump_control(l1, eps, grid));
        rep.numbers["form_lambda2"] = quadratic_form(spec, bump_control(l2, eps, grid));
    }
    return rep;
}

} // namespace qlandscape
