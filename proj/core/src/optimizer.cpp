#include "qlandscape/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "qlandscape/errors.hpp"

namespace qlandscape {

namespace {

constexpr double kStepFloor = 1e-12;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QLANDSCAPE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return hw;
}

} // namespace

void OptimizerConfig::validate() const {
    if (max_iters <= 0 || !(grad_tol > 0) || !(init_step > 0) || restarts < 1 ||
        !(init_amplitude > 0))
        throw Error("OptimizerConfig: all parameters must be positive");
    if (!(backtrack_factor > 0 && backtrack_factor < 1) || !(armijo_c > 0 && armijo_c < 1))
        throw Error("OptimizerConfig: backtrack_factor and armijo_c must lie in (0,1)");
}

std::string to_string(RunClass c) {
    switch (c) {
        case RunClass::global: return "global";
        case RunClass::trap: return "trap";
        case RunClass::undecided: return "undecided";
    }
    return "unknown";
}

double seeded_uniform(std::uint64_t seed, std::uint64_t index, double amp) {
    const std::uint64_t bits = splitmix64(splitmix64(seed) ^ index);
    // 53-bit mantissa draw in [0, 1)
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return amp * (2.0 * u - 1.0);
}

ControlGrid random_initial_control(double T, std::size_t n, std::uint64_t seed, double amp) {
    ControlGrid grid(T, n, 0.0);
    for (std::size_t k = 0; k < n; ++k) grid.f[k] = seeded_uniform(seed, k, amp);
    return grid;
}

RunReport gradient_ascent(const ControlTask& task, const ControlGrid& init,
                          const OptimizerConfig& cfg) {
    cfg.validate();
    if (std::abs(init.T - task.T) > tol::structural * std::max(1.0, task.T))
        throw TimeMismatch("gradient_ascent: init.T != task.T");

    const double J_global = global_max_value(task);
    const double threshold = cfg.global_threshold >= 0.0
                                 ? cfg.global_threshold
                                 : std::max(1e-6, 1e-3 * std::abs(J_global));

    RunReport rep;
    rep.seed = cfg.seed;
    ControlGrid f = init;
    const double dt = f.dt();
    double J = objective(task, f);
    rep.J_trace.push_back(J);

    bool step_floor_hit = false;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        const std::vector<double> g = gradient(task, f);
        double gn2 = 0.0;
        for (double gi : g) gn2 += gi * gi;
        gn2 *= dt; // squared L2 grid norm
        rep.grad_norm_final = std::sqrt(gn2);
        if (rep.grad_norm_final <= cfg.grad_tol) {
            rep.converged = true;
            break;
        }

        double alpha = cfg.init_step;
        bool accepted = false;
        ControlGrid trial = f;
        while (alpha >= kStepFloor) {
            for (std::size_t k = 0; k < f.n(); ++k) trial.f[k] = f.f[k] + alpha * g[k];
            const double J_try = objective(task, trial);
            if (J_try >= J + cfg.armijo_c * alpha * gn2) {
                f = trial;
                J = J_try;
                accepted = true;
                break;
            }
            alpha *= cfg.backtrack_factor;
        }
        if (!accepted) {
            step_floor_hit = true;
            break;
        }
        rep.J_trace.push_back(J);
        rep.iterations = iter + 1;
    }

    rep.J_final = J;
    rep.control_final = std::move(f);
    if (rep.J_final >= J_global - threshold)
        rep.classified_as = RunClass::global;
    else if (rep.converged && !step_floor_hit)
        rep.classified_as = RunClass::trap;
    else
        rep.classified_as = RunClass::undecided;
    return rep;
}

MultistartSummary multistart(const ControlTask& task, const OptimizerConfig& cfg, std::size_t n) {
    cfg.validate();
    MultistartSummary out;
    out.runs.resize(static_cast<std::size_t>(cfg.restarts));

    const unsigned workers =
        std::min<unsigned>(thread_cap(), static_cast<unsigned>(cfg.restarts));
    auto run_one = [&](std::size_t i) {
        OptimizerConfig rc = cfg;
        rc.seed = cfg.seed + i;
        const ControlGrid init = random_initial_control(task.T, n, rc.seed, cfg.init_amplitude);
        out.runs[i] = gradient_ascent(task, init, rc);
    };

    if (workers <= 1) {
        for (std::size_t i = 0; i < out.runs.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < out.runs.size();
                     i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& t : pool) t.join();
    }

    std::size_t n_global = 0;
    out.best_J = out.runs.front().J_final;
    bool any_converged = false;
    for (const RunReport& r : out.runs) {
        if (r.classified_as == RunClass::global) ++n_global;
        out.best_J = std::max(out.best_J, r.J_final);
        if (r.converged) {
            out.worst_converged_J =
                any_converged ? std::min(out.worst_converged_J, r.J_final) : r.J_final;
            any_converged = true;
        }
    }
    if (!any_converged) {
        out.worst_converged_J = out.runs.front().J_final;
        for (const RunReport& r : out.runs)
            out.worst_converged_J = std::min(out.worst_converged_J, r.J_final);
    }
    out.fraction_global =
        static_cast<double>(n_global) / static_cast<double>(out.runs.size());
    return out;
}

double global_max_value(const ControlTask& task) {
    return 0.5 * (task.tr_A() + task.a_vec().norm() * task.r0_vec().norm());
}

} // namespace qlandscape
