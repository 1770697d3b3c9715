#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlandscape/config.hpp"
#include "qlandscape/errors.hpp"

using namespace qlandscape;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

#ifndef QLANDSCAPE_CLI_PATH
#error "QLANDSCAPE_CLI_PATH must be defined by the build"
#endif

const char* kDefaultConfig =
    "[system]\n"
    "v_x = 1.0\n"
    "v_y = 0.0\n"
    "[task]\n"
    "rho0_bloch = 0, 1, 0\n"
    "a_bloch = 0.70710678118654752, 0.70710678118654752, 0\n"
    "tr_A = 1.0\n"
    "T = 1.8849555921538759\n"
    "[grid]\n"
    "n = 128\n";

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qlandscape_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(QLANDSCAPE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parses a CSV with an optional leading comment line and one header line.
std::vector<std::vector<std::string>> csv_rows(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(cell);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

TEST_CASE("config parsing") {
    TempDir dir;
    const fs::path cfg_path = write_file(dir.path, "task.ini", kDefaultConfig);

    SUBCASE("fields land where they should") {
        const TaskConfig cfg = load_config(cfg_path.string());
        CHECK(cfg.v_x == 1.0);
        CHECK(cfg.rho0_bloch.y == 1.0);
        CHECK(cfg.tr_A == 1.0);
        CHECK(cfg.n == 128);
        CHECK(cfg.T == doctest::Approx(0.6 * M_PI).epsilon(1e-15));
    }
    SUBCASE("overrides") {
        const TaskConfig cfg = load_config(cfg_path.string(), {"grid.n=64", "task.T=0.5"});
        CHECK(cfg.n == 64);
        CHECK(cfg.T == 0.5);
    }
    SUBCASE("comments and blank lines are ignored") {
        const fs::path p = write_file(dir.path, "c.ini",
                                      "# leading comment\n\n[grid]\nn = 16 ; trailing\n");
        CHECK(load_config(p.string()).n == 16);
    }
    SUBCASE("unknown key") {
        const fs::path p = write_file(dir.path, "bad.ini", "[grid]\nm = 7\n");
        CHECK_THROWS_AS(load_config(p.string()), ConfigError);
    }
    SUBCASE("malformed value") {
        const fs::path p = write_file(dir.path, "bad2.ini", "[grid]\nn = seven\n");
        CHECK_THROWS_AS(load_config(p.string()), ConfigError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_config((dir.path / "nope.ini").string()), ConfigError);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(load_config(cfg_path.string(), {"grid.n=4"}), ConfigError);
        CHECK_THROWS_AS(load_config(cfg_path.string(), {"task.T=-1"}), ConfigError);
        CHECK_THROWS_AS(load_config(cfg_path.string(), {"task.rho0_bloch=1,1,1"}), ConfigError);
        CHECK_THROWS_AS(load_config(cfg_path.string(), {"system.v_x=0", "system.v_y=0"}),
                        ConfigError);
    }
}

TEST_CASE("simulate") {
    TempDir dir;
    const fs::path cfg = write_file(dir.path, "task.ini", kDefaultConfig);
    const std::string common = "--config " + cfg.string() + " --out " + dir.path.string();

    SUBCASE("free evolution over a full period returns to the start") {
        REQUIRE(run_cli("simulate " + common +
                        " --set task.T=3.1415926535897932") == 0);
        const auto rows = csv_rows(dir.path / "trajectory.csv");
        REQUIRE(rows.size() == 130); // header + n + 1 samples
        CHECK(rows[0] == std::vector<std::string>{"t", "r_x", "r_y", "r_z", "J_running"});
        const auto& last = rows.back();
        CHECK(std::stod(last[1]) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(std::stod(last[2]) == doctest::Approx(1.0).epsilon(1e-12));
        // Norm is conserved along the whole trajectory.
        for (std::size_t k = 1; k < rows.size(); ++k) {
            const double x = std::stod(rows[k][1]), y = std::stod(rows[k][2]),
                         z = std::stod(rows[k][3]);
            CHECK(std::abs(std::sqrt(x * x + y * y + z * z) - 1.0) <= 1e-12);
        }
    }
    SUBCASE("values carry 17 significant digits") {
        REQUIRE(run_cli("simulate " + common) == 0);
        const std::string text = slurp(dir.path / "trajectory.csv");
        CHECK(text.find("0.70710678118654") != std::string::npos);
    }
    SUBCASE("control file of the right length is accepted") {
        std::string vals;
        for (int i = 0; i < 128; ++i) vals += "0.25\n";
        const fs::path ctrl = write_file(dir.path, "f.txt", vals);
        CHECK(run_cli("simulate " + common + " --control " + ctrl.string()) == 0);
    }
    SUBCASE("control length mismatch exits 3") {
        const fs::path ctrl = write_file(dir.path, "short.txt", "0.1\n0.2\n");
        CHECK(run_cli("simulate " + common + " --control " + ctrl.string()) == 3);
    }
    SUBCASE("missing control file exits 3") {
        CHECK(run_cli("simulate " + common + " --control " +
                      (dir.path / "absent.txt").string()) == 3);
    }
}

TEST_CASE("classify") {
    TempDir dir;
    const fs::path cfg = write_file(dir.path, "task.ini", kDefaultConfig);
    REQUIRE(run_cli("classify --config " + cfg.string() + " --out " + dir.path.string()) == 0);

    const json j = json::parse(slurp(dir.path / "classify.json"));
    CHECK(j["verdict"] == "saddle");
    CHECK(j["grad_norm"].get<double>() <= 1e-10);
    CHECK(j["min_eig"].get<double>() < 0.0);
    CHECK(j["max_eig"].get<double>() > 0.0);
    const double s = 1.0 / std::sqrt(2.0), twoT = 1.2 * M_PI;
    const double J0_expected = 0.5 * (1.0 + s * (std::cos(twoT) - std::sin(twoT)));
    CHECK(j["J0"].get<double>() == doctest::Approx(J0_expected).epsilon(1e-10));
    CHECK(j["J_global"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j["lambda1"].is_number());
    CHECK(j["lambda2"].is_number());

    const auto rows = csv_rows(dir.path / "spectrum.csv");
    REQUIRE(rows.size() == 129); // header + n eigenvalues
    CHECK(rows[0][0] == "eigenvalue");
    // Ascending order, matching the JSON extremes.
    double prev = std::stod(rows[1][0]);
    for (std::size_t k = 2; k < rows.size(); ++k) {
        const double e = std::stod(rows[k][0]);
        CHECK(e >= prev);
        prev = e;
    }
    CHECK(std::stod(rows[1][0]) == doctest::Approx(j["min_eig"].get<double>()).epsilon(1e-12));
    CHECK(std::stod(rows.back()[0]) == doctest::Approx(j["max_eig"].get<double>()).epsilon(1e-12));
}

TEST_CASE("check-theorems") {
    TempDir dir;
    const fs::path cfg = write_file(dir.path, "task.ini", kDefaultConfig);
    const std::string common = "--config " + cfg.string() + " --out " + dir.path.string();

    SUBCASE("saddle-time task") {
        REQUIRE(run_cli("check-theorems " + common) == 0);
        const json reports = json::parse(slurp(dir.path / "theorems.json"));
        REQUIRE(reports.size() == 3);
        CHECK(reports[0]["theorem_id"] == "T1");
        CHECK(reports[0]["numbers"]["f0"].get<double>() == 0.0);
        CHECK(reports[0]["numbers"]["T0"].get<double>() == doctest::Approx(M_PI).epsilon(1e-14));
        CHECK(reports[1]["theorem_id"] == "T2");
        CHECK(reports[2]["theorem_id"] == "T3");
        CHECK(reports[2]["all_hold"] == true);
    }
    SUBCASE("short-time task marks T3 inapplicable") {
        REQUIRE(run_cli("check-theorems " + common + " --set task.T=0.39269908169872414") == 0);
        const json reports = json::parse(slurp(dir.path / "theorems.json"));
        CHECK(reports[1]["all_hold"] == true); // trap hypotheses hold at T = pi/8
        CHECK(reports[2]["all_hold"] == false);
        const std::string c = reports[2]["conclusion"].get<std::string>();
        CHECK(c.find("inapplicable") != std::string::npos);
    }
}

TEST_CASE("scan-t") {
    TempDir dir;
    const fs::path cfg = write_file(dir.path, "task.ini", kDefaultConfig);
    const std::string common = "--config " + cfg.string() + " --out " + dir.path.string() +
                               " --set grid.n=64";

    SUBCASE("verdict flips from trap candidate to saddle across the scan") {
        REQUIRE(run_cli("scan-t " + common + " --t-min 0.3926990816987241 --t-max "
                        "1.8849555921538759 --steps 5") == 0);
        const auto rows = csv_rows(dir.path / "scan_t.csv");
        REQUIRE(rows.size() == 6);
        CHECK(rows[0][0] == "T");
        CHECK(rows[1][1] == "trap_candidate_max"); // T = pi/8
        CHECK(rows[5][1] == "saddle");             // T = 0.6 pi
        CHECK(rows[1][6] == "1");
        CHECK(rows[5][6] == "0");
    }
    SUBCASE("bad range exits 2") {
        CHECK(run_cli("scan-t " + common + " --t-min 2 --t-max 1 --steps 5") == 2);
        CHECK(run_cli("scan-t " + common + " --t-min 1 --t-max 2 --steps 1") == 2);
    }
}

TEST_CASE("optimize") {
    TempDir dir;
    const fs::path cfg = write_file(
        dir.path, "task.ini",
        std::string(kDefaultConfig) + "[optimizer]\nrestarts = 4\nseed = 3\n");
    const std::string common = "--config " + cfg.string() + " --out " + dir.path.string() +
                               " --set grid.n=48 --set task.T=3.7699111843077517";

    SUBCASE("summary and per-seed traces") {
        REQUIRE(run_cli("optimize " + common) == 0);
        const json j = json::parse(slurp(dir.path / "optimize.json"));
        CHECK(j["fraction_global"].get<double>() == 1.0);
        CHECK(j["best_J"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
        REQUIRE(j["runs"].size() == 4);
        for (const auto& r : j["runs"]) {
            const auto seed = r["seed"].get<std::uint64_t>();
            const auto rows = csv_rows(dir.path / ("trace_seed" + std::to_string(seed) + ".csv"));
            REQUIRE(rows.size() >= 3);
            CHECK(rows[0][1] == "J");
            CHECK(std::stod(rows.back()[1]) == doctest::Approx(r["J_final"].get<double>()));
        }
    }
    SUBCASE("restarts = 0 exits 2") {
        CHECK(run_cli("optimize " + common + " --set optimizer.restarts=0") == 2);
    }
}

TEST_CASE("CLI argument errors") {
    TempDir dir;
    CHECK(run_cli("classify") == 2);          // missing required --config
    CHECK(run_cli("no-such-command") == 2);   // unknown subcommand
    const fs::path bad = write_file(dir.path, "bad.ini", "[grid]\nn = nope\n");
    CHECK(run_cli("classify --config " + bad.string()) == 2);
}
