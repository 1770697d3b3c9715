#ifndef QLANDSCAPE_CONFIG_HPP
#define QLANDSCAPE_CONFIG_HPP

#include <string>
#include <vector>

#include "qlandscape/dynamics.hpp"
#include "qlandscape/optimizer.hpp"

namespace qlandscape {

/// One serializable record aggregating the system, task, grid, optimizer and
/// tolerance settings consumed by the CLI commands.
///
/// Config file format: INI-style sections with key = value lines.
///
///   [system]
///   v_x = 1.0
///   v_y = 0.0
///   [task]
///   rho0_bloch = 0, 1, 0
///   a_bloch = 0.7071, 0.7071, 0
///   tr_A = 1.0
///   T = 1.8849555921538759
///   [grid]
///   n = 256
///   [optimizer]
///   max_iters = 500
///   grad_tol = 1e-8
///   init_step = 1.0
///   backtrack_factor = 0.5
///   armijo_c = 1e-4
///   restarts = 20
///   seed = 1
///   init_amplitude = 2.0
///   global_threshold = -1        ; <0 means max(1e-6, 1e-3 |J_global|)
///   [tolerances]
///   classify_tol = 1e-8
struct TaskConfig {
    double v_x = 1.0;
    double v_y = 0.0;
    BlochVector rho0_bloch{0.0, 1.0, 0.0};
    BlochVector a_bloch{1.0, 0.0, 0.0};
    double tr_A = 1.0;
    double T = 1.0;
    int n = 256;
    OptimizerConfig optimizer;
    double classify_tol = 1e-8;

    void validate() const;     // throws ConfigError
    ControlTask to_task() const;
};

/// Parses the INI config file, then applies overrides of the form
/// "section.key=value". Throws ConfigError on unreadable files, unknown keys
/// or malformed values.
TaskConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Applies one "section.key=value" override.
void apply_override(TaskConfig& cfg, const std::string& spec);

} // namespace qlandscape

#endif
