#ifndef QLANDSCAPE_OPTIMIZER_HPP
#define QLANDSCAPE_OPTIMIZER_HPP

#include <cstdint>
#include <vector>

#include "qlandscape/dynamics.hpp"

namespace qlandscape {

struct OptimizerConfig {
    int max_iters = 500;
    double grad_tol = 1e-8;        // stop when the L2 grid norm of the gradient drops below
    double init_step = 1.0;
    double backtrack_factor = 0.5; // in (0,1)
    double armijo_c = 1e-4;        // in (0,1)
    int restarts = 20;
    std::uint64_t seed = 1;
    double init_amplitude = 2.0;   // initial controls uniform in [-amp, amp]
    double global_threshold = -1.0; // < 0: use max(1e-6, 1e-3 |J_global|)

    void validate() const;
};

enum class RunClass { global, trap, undecided };

std::string to_string(RunClass c);

struct RunReport {
    double J_final = 0.0;
    std::vector<double> J_trace;
    double grad_norm_final = 0.0;
    int iterations = 0;
    bool converged = false;
    RunClass classified_as = RunClass::undecided;
    ControlGrid control_final;
    std::uint64_t seed = 0;
};

struct MultistartSummary {
    std::vector<RunReport> runs;
    double fraction_global = 0.0;
    double best_J = 0.0;
    double worst_converged_J = 0.0;
};

/// Deterministic counter-based uniform draw in [-amp, amp] (splitmix64 keyed
/// by seed and index), identical across platforms.
double seeded_uniform(std::uint64_t seed, std::uint64_t index, double amp);

ControlGrid random_initial_control(double T, std::size_t n, std::uint64_t seed, double amp);

/// Monotone gradient ascent with Armijo backtracking line search.
RunReport gradient_ascent(const ControlTask& task, const ControlGrid& init,
                          const OptimizerConfig& cfg);

/// cfg.restarts independent ascents seeded seed, seed+1, ...; deterministic
/// for fixed (task, cfg, n). Honors the QLANDSCAPE_THREADS env cap.
MultistartSummary multistart(const ControlTask& task, const OptimizerConfig& cfg, std::size_t n);

/// Maximum of Tr(U rho0 U^dag A) over all unitaries: (Tr A + |a||r0|)/2.
double global_max_value(const ControlTask& task);

} // namespace qlandscape

#endif
