// qlandscape: command-line front end for qubit control-landscape analysis.
//
// Subcommands: simulate | classify | check-theorems | scan-t | optimize
// Exit codes: 0 success, 2 config/validation error, 3 data-file error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlandscape/config.hpp"
#include "qlandscape/errors.hpp"
#include "qlandscape/landscape.hpp"
#include "qlandscape/optimizer.hpp"
#include "qlandscape/theorems.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qlandscape;

namespace {

const char* kCsvUnitsHeader =
    "# units: natural units of the planar qubit system (hbar = 1, drift sigma_z); "
    "times in inverse energy\n";

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Write whole files atomically: temp file in the same directory, then rename.
void atomic_write(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataFileError("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "Task config file")->required();
    cmd->add_option("--set", args.overrides, "Override a config field (section.key=value)");
    cmd->add_option("--out", args.out_dir, "Output directory");
}

TaskConfig load(const CommonArgs& args) {
    const TaskConfig cfg = load_config(args.config_path, args.overrides);
    fs::create_directories(args.out_dir);
    return cfg;
}

json report_to_json(const CriticalPointReport& rep) {
    json j;
    j["verdict"] = to_string(rep.verdict);
    j["grad_norm"] = rep.grad_norm;
    j["min_eig"] = rep.min_eig;
    j["max_eig"] = rep.max_eig;
    j["lambda1"] = rep.lambda1 ? json(*rep.lambda1) : json(nullptr);
    j["lambda2"] = rep.lambda2 ? json(*rep.lambda2) : json(nullptr);
    j["J0"] = rep.J0;
    j["J_global"] = rep.J_global;
    return j;
}

json theorem_to_json(const TheoremReport& rep) {
    json j;
    j["theorem_id"] = rep.theorem_id;
    j["conclusion"] = rep.conclusion;
    j["all_hold"] = rep.all_hold;
    json hyps = json::array();
    for (const auto& h : rep.hypotheses)
        hyps.push_back({{"name", h.name}, {"value", h.value}, {"status", to_string(h.status)}});
    j["hypotheses"] = hyps;
    j["numbers"] = rep.numbers;
    return j;
}

int cmd_simulate(const CommonArgs& args, const std::string& control_file) {
    const TaskConfig cfg = load(args);
    const ControlTask task = cfg.to_task();

    ControlGrid grid(cfg.T, static_cast<std::size_t>(cfg.n), 0.0);
    if (!control_file.empty()) {
        std::ifstream in(control_file);
        if (!in) throw DataFileError("cannot open control file " + control_file);
        std::vector<double> values;
        double x;
        while (in >> x) values.push_back(x);
        if (values.size() != static_cast<std::size_t>(cfg.n))
            throw DataFileError("control file has " + std::to_string(values.size()) +
                                " values, grid.n = " + std::to_string(cfg.n));
        grid = ControlGrid(cfg.T, std::move(values));
    }

    const std::vector<BlochVector> traj = bloch_trajectory(task, grid);
    const BlochVector a = task.a_vec();
    const double dt = grid.dt();

    std::string csv{kCsvUnitsHeader};
    csv += "t,r_x,r_y,r_z,J_running\n";
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const double t = static_cast<double>(k) * dt;
        const double J = 0.5 * (task.tr_A() + dot(a, traj[k]));
        csv += fmt17(t) + "," + fmt17(traj[k].x) + "," + fmt17(traj[k].y) + "," +
               fmt17(traj[k].z) + "," + fmt17(J) + "\n";
    }
    atomic_write(fs::path(args.out_dir) / "trajectory.csv", csv);
    return 0;
}

int cmd_classify(const CommonArgs& args) {
    const TaskConfig cfg = load(args);
    const ControlTask task = cfg.to_task();
    const CriticalPointReport rep =
        classify_critical_point(task, static_cast<std::size_t>(cfg.n), cfg.classify_tol);

    atomic_write(fs::path(args.out_dir) / "classify.json", report_to_json(rep).dump(2) + "\n");

    std::string csv{kCsvUnitsHeader};
    csv += "eigenvalue\n";
    try {
        for (double e : hessian_spectrum(build_kernel_spec(task), static_cast<std::size_t>(cfg.n)))
            csv += fmt17(e) + "\n";
    } catch (const Error&) {
        // Non-coplanar or degenerate task: no kernel, empty spectrum.
    }
    atomic_write(fs::path(args.out_dir) / "spectrum.csv", csv);
    return 0;
}

int cmd_check_theorems(const CommonArgs& args) {
    const TaskConfig cfg = load(args);
    const ControlTask task = cfg.to_task();

    json reports = json::array();

    {
        const Theorem1Threshold t1 = theorem1_threshold(task.system.h0, task.system.v);
        json j;
        j["theorem_id"] = "T1";
        j["numbers"] = {{"f0", t1.f0}, {"T0", t1.T0}, {"T", cfg.T}};
        const bool above = cfg.T >= t1.T0;
        j["all_hold"] = above;
        j["conclusion"] = above ? "T >= T0: all maxima of the objective are global"
                                : "T < T0: the large-time guarantee does not apply";
        reports.push_back(j);
    }

    reports.push_back(theorem_to_json(
        theorem2_conditions(task.r0_vec(), task.a_vec(), task.v_vec(), task.h0_vec(), cfg.T)));

    if (task.T > M_PI / 2.0) {
        reports.push_back(
            theorem_to_json(theorem3_certificate(task, static_cast<std::size_t>(cfg.n))));
    } else {
        json j;
        j["theorem_id"] = "T3";
        j["all_hold"] = false;
        j["conclusion"] = "TimeTooShort - theorem inapplicable for T <= pi/2";
        j["numbers"] = {{"T", cfg.T}};
        reports.push_back(j);
    }

    atomic_write(fs::path(args.out_dir) / "theorems.json", reports.dump(2) + "\n");
    return 0;
}

int cmd_scan_T(const CommonArgs& args, double t_min, double t_max, int steps) {
    if (!(t_min > 0.0) || !(t_max > t_min) || steps < 2)
        throw ConfigError("scan-t: need 0 < t_min < t_max and steps >= 2");
    const TaskConfig base = load(args);

    std::string csv{kCsvUnitsHeader};
    csv += "T,verdict,min_eig,max_eig,J0,J_global,theorem2_holds\n";
    for (int i = 0; i < steps; ++i) {
        const double T = t_min + (t_max - t_min) * static_cast<double>(i) /
                                     static_cast<double>(steps - 1);
        TaskConfig cfg = base;
        cfg.T = T;
        const ControlTask task = cfg.to_task();
        const CriticalPointReport rep =
            classify_critical_point(task, static_cast<std::size_t>(cfg.n), cfg.classify_tol);
        const TheoremReport t2 =
            theorem2_conditions(task.r0_vec(), task.a_vec(), task.v_vec(), task.h0_vec(), T);
        csv += fmt17(T) + "," + to_string(rep.verdict) + "," + fmt17(rep.min_eig) + "," +
               fmt17(rep.max_eig) + "," + fmt17(rep.J0) + "," + fmt17(rep.J_global) + "," +
               (t2.all_hold ? "1" : "0") + "\n";
    }
    atomic_write(fs::path(args.out_dir) / "scan_t.csv", csv);
    return 0;
}

int cmd_optimize(const CommonArgs& args) {
    const TaskConfig cfg = load(args);
    const ControlTask task = cfg.to_task();
    const MultistartSummary summary =
        multistart(task, cfg.optimizer, static_cast<std::size_t>(cfg.n));

    json j;
    j["fraction_global"] = summary.fraction_global;
    j["best_J"] = summary.best_J;
    j["worst_converged_J"] = summary.worst_converged_J;
    j["J_global"] = global_max_value(task);
    json runs = json::array();
    for (const RunReport& r : summary.runs) {
        runs.push_back({{"seed", r.seed},
                        {"J_final", r.J_final},
                        {"grad_norm_final", r.grad_norm_final},
                        {"iterations", r.iterations},
                        {"converged", r.converged},
                        {"classified_as", to_string(r.classified_as)}});

        std::string csv{kCsvUnitsHeader};
        csv += "iteration,J\n";
        for (std::size_t i = 0; i < r.J_trace.size(); ++i)
            csv += std::to_string(i) + "," + fmt17(r.J_trace[i]) + "\n";
        atomic_write(fs::path(args.out_dir) / ("trace_seed" + std::to_string(r.seed) + ".csv"),
                     csv);
    }
    j["runs"] = runs;
    atomic_write(fs::path(args.out_dir) / "optimize.json", j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-control landscape analysis for a driven qubit"};
    app.require_subcommand(1);

    CommonArgs sim_args, cls_args, thm_args, scan_args, opt_args;
    std::string control_file;
    double t_min = 0.0, t_max = 0.0;
    int steps = 0;

    CLI::App* sim = app.add_subcommand("simulate", "Propagate and emit the Bloch trajectory CSV");
    add_common(sim, sim_args);
    sim->add_option("--control", control_file, "Control values, one per line (default f = 0)");

    CLI::App* cls = app.add_subcommand("classify", "Classify f = 0 and emit the Hessian spectrum");
    add_common(cls, cls_args);

    CLI::App* thm = app.add_subcommand("check-theorems", "Evaluate the threshold and trap checks");
    add_common(thm, thm_args);

    CLI::App* scan = app.add_subcommand("scan-t", "Classify across a range of final times");
    add_common(scan, scan_args);
    scan->add_option("--t-min", t_min, "Smallest final time")->required();
    scan->add_option("--t-max", t_max, "Largest final time")->required();
    scan->add_option("--steps", steps, "Number of scan points")->required();

    CLI::App* opt = app.add_subcommand("optimize", "Multistart gradient-ascent survey");
    add_common(opt, opt_args);

    try {
        app.parse(argc, argv);
        if (sim->parsed()) return cmd_simulate(sim_args, control_file);
        if (cls->parsed()) return cmd_classify(cls_args);
        if (thm->parsed()) return cmd_check_theorems(thm_args);
        if (scan->parsed()) return cmd_scan_T(scan_args, t_min, t_max, steps);
        if (opt->parsed()) return cmd_optimize(opt_args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const DataFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
