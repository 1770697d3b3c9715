#include "qlandscape/config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "qlandscape/errors.hpp"

namespace qlandscape {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for " + key + ": '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for " + key + ": '" + value + "'");
    }
}

BlochVector parse_vec3(const std::string& key, const std::string& value) {
    std::string s = value;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream in(s);
    double x, y, z;
    if (!(in >> x >> y >> z)) throw ConfigError("config: " + key + " needs three components");
    std::string rest;
    if (in >> rest) throw ConfigError("config: " + key + " has trailing data");
    return {x, y, z};
}

void set_field(TaskConfig& cfg, const std::string& section, const std::string& key,
               const std::string& value) {
    const std::string full = section + "." + key;
    if (section == "system") {
        if (key == "v_x") cfg.v_x = parse_double(full, value);
        else if (key == "v_y") cfg.v_y = parse_double(full, value);
        else throw ConfigError("config: unknown key " + full);
    } else if (section == "task") {
        if (key == "rho0_bloch") cfg.rho0_bloch = parse_vec3(full, value);
        else if (key == "a_bloch") cfg.a_bloch = parse_vec3(full, value);
        else if (key == "tr_A") cfg.tr_A = parse_double(full, value);
        else if (key == "T") cfg.T = parse_double(full, value);
        else throw ConfigError("config: unknown key " + full);
    } else if (section == "grid") {
        if (key == "n") cfg.n = static_cast<int>(parse_int(full, value));
        else throw ConfigError("config: unknown key " + full);
    } else if (section == "optimizer") {
        auto& o = cfg.optimizer;
        if (key == "max_iters") o.max_iters = static_cast<int>(parse_int(full, value));
        else if (key == "grad_tol") o.grad_tol = parse_double(full, value);
        else if (key == "init_step") o.init_step = parse_double(full, value);
        else if (key == "backtrack_factor") o.backtrack_factor = parse_double(full, value);
        else if (key == "armijo_c") o.armijo_c = parse_double(full, value);
        else if (key == "restarts") o.restarts = static_cast<int>(parse_int(full, value));
        else if (key == "seed") o.seed = static_cast<std::uint64_t>(parse_int(full, value));
        else if (key == "init_amplitude") o.init_amplitude = parse_double(full, value);
        else if (key == "global_threshold") o.global_threshold = parse_double(full, value);
        else throw ConfigError("config: unknown key " + full);
    } else if (section == "tolerances") {
        if (key == "classify_tol") cfg.classify_tol = parse_double(full, value);
        else throw ConfigError("config: unknown key " + full);
    } else {
        throw ConfigError("config: unknown section [" + section + "]");
    }
}

} // namespace

void TaskConfig::validate() const {
    if (!(T > 0.0)) throw ConfigError("config: task.T must be positive");
    if (n < 8) throw ConfigError("config: grid.n must be >= 8");
    if (rho0_bloch.norm() > 1.0 + tol::structural)
        throw ConfigError("config: |task.rho0_bloch| must be <= 1");
    if (!rho0_bloch.finite() || !a_bloch.finite() || !std::isfinite(tr_A) ||
        !std::isfinite(v_x) || !std::isfinite(v_y))
        throw ConfigError("config: non-finite value");
    if (v_x == 0.0 && v_y == 0.0) throw ConfigError("config: coupling v must be nonzero");
    try {
        optimizer.validate();
    } catch (const Error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

ControlTask TaskConfig::to_task() const {
    validate();
    return ControlTask(QubitSystem::planar(v_x, v_y), Hermitian2{0.5, 0.5 * rho0_bloch},
                       Hermitian2{0.5 * tr_A, 0.5 * a_bloch}, T);
}

void apply_override(TaskConfig& cfg, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects section.key=value: " + spec);
    const std::string path = trim(spec.substr(0, eq));
    const std::string value = trim(spec.substr(eq + 1));
    const auto dotpos = path.find('.');
    if (dotpos == std::string::npos)
        throw ConfigError("--set expects section.key=value: " + spec);
    set_field(cfg, path.substr(0, dotpos), path.substr(dotpos + 1), value);
}

TaskConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);

    TaskConfig cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments
        for (const char marker : {'#', ';'}) {
            const auto pos = line.find(marker);
            if (pos != std::string::npos) line.erase(pos);
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config: malformed section header at line " +
                                  std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " + std::to_string(lineno));
        if (section.empty())
            throw ConfigError("config: key outside any section at line " + std::to_string(lineno));
        set_field(cfg, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }

    for (const std::string& ov : overrides) apply_override(cfg, ov);
    cfg.validate();
    return cfg;
}

} // namespace qlandscape
